"""Tiny parser for product expressions over generators t1..tm, v1..vn.

Grammar::

    expr   := term (('+' | '-') term)*
    term   := factor ('*' factor)*          # left-associated
    factor := '-' factor | NUMBER | NAME | '(' expr ')'

Trees are nested tuples: ('gen', name), ('num', text), ('neg', a),
('add', a, b), ('sub', a, b), ('mul', a, b).
"""

from __future__ import annotations

import re

_TOKEN = re.compile(r"\s*(?:(\d+(?:/\d+)?)|([A-Za-z_]\w*)|(.))")


class ExprSyntaxError(ValueError):
    pass


def tokenize(text: str) -> list:
    out = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        num, name, op = m.groups()
        if num is not None:
            out.append(("num", num, m.start(1)))
        elif name is not None:
            out.append(("name", name, m.start(2)))
        else:
            if op not in "+-*()":
                raise ExprSyntaxError(f"unexpected character {op!r} at offset {m.start(3)}")
            out.append((op, op, m.start(3)))
        pos = m.end()
    return out


def parse(text: str):
    toks = tokenize(text)
    pos = 0

    def peek():
        return toks[pos][0] if pos < len(toks) else None

    def take(kind):
        nonlocal pos
        if peek() != kind:
            where = toks[pos][2] if pos < len(toks) else len(text)
            raise ExprSyntaxError(f"expected {kind!r} at offset {where}")
        tok = toks[pos]
        pos += 1
        return tok

    def expr():
        node = term()
        while peek() in ("+", "-"):
            op = take(peek())[0]
            node = ("add" if op == "+" else "sub", node, term())
        return node

    def term():
        node = factor()
        while peek() == "*":
            take("*")
            node = ("mul", node, factor())
        return node

    def factor():
        kind = peek()
        if kind == "-":
            take("-")
            return ("neg", factor())
        if kind == "num":
            return ("num", take("num")[1])
        if kind == "name":
            return ("gen", take("name")[1])
        if kind == "(":
            take("(")
            node = expr()
            take(")")
            return node
        where = toks[pos][2] if pos < len(toks) else len(text)
        raise ExprSyntaxError(f"expected a factor at offset {where}")

    if not toks:
        raise ExprSyntaxError("empty expression")
    tree = expr()
    if pos != len(toks):
        raise ExprSyntaxError(f"trailing input at offset {toks[pos][2]}")
    return tree


def fold(tree, *, gen, num, add, neg, mul):
    """Evaluate a tree bottom-up with the supplied operations."""
    kind = tree[0]
    rec = lambda t: fold(t, gen=gen, num=num, add=add, neg=neg, mul=mul)  # noqa: E731
    if kind == "gen":
        return gen(tree[1])
    if kind == "num":
        return num(tree[1])
    if kind == "neg":
        return neg(rec(tree[1]))
    if kind == "add":
        return add(rec(tree[1]), rec(tree[2]))
    if kind == "sub":
        return add(rec(tree[1]), neg(rec(tree[2])))
    if kind == "mul":
        return mul(rec(tree[1]), rec(tree[2]))
    raise ValueError(f"bad tree node {kind!r}")


def generators(tree) -> set:
    if tree[0] == "gen":
        return {tree[1]}
    if tree[0] == "num":
        return set()
    return set().union(*(generators(t) for t in tree[1:]))


def to_text(tree) -> str:
    kind = tree[0]
    if kind in ("gen", "num"):
        return tree[1]
    if kind == "neg":
        return f"-({to_text(tree[1])})"
    op = {"add": "+", "sub": "-", "mul": "*"}[kind]
    return f"({to_text(tree[1])}{op}{to_text(tree[2])})"
