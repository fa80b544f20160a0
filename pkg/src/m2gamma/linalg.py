"""Exact linear algebra over a FieldSpec.

Vectors are sparse dicts ``{key: coeff}`` with sortable keys and no stored
zeros.  Dense helpers take lists of lists.
"""

from __future__ import annotations

from .fields import FieldSpec


def axpy(acc: dict, c, vec: dict) -> None:
    """acc += c * vec, in place, pruning zeros."""
    for k, v in vec.items():
        s = acc.get(k, 0) + c * v
        if s:
            acc[k] = s
        else:
            acc.pop(k, None)


def scaled(c, vec: dict) -> dict:
    if not c:
        return {}
    return {k: c * v for k, v in vec.items() if c * v}


class Echelon:
    """Incrementally built echelon basis of a span of sparse vectors.

    Each stored row is normalized so that its smallest key (the pivot) has
    coefficient 1; every other key of the row is larger than the pivot.
    """

    def __init__(self):
        self.rows: dict = {}

    def __len__(self):
        return len(self.rows)

    def reduce(self, vec: dict) -> dict:
        res = {k: v for k, v in vec.items() if v}
        while True:
            hits = [k for k in res if k in self.rows]
            if not hits:
                return res
            k = min(hits)
            axpy(res, -res[k], self.rows[k])

    def add(self, vec: dict) -> bool:
        """Insert ``vec``; return True when it enlarged the span."""
        res = self.reduce(vec)
        if not res:
            return False
        p = min(res)
        inv = 1 / res[p]
        self.rows[p] = {k: v * inv for k, v in res.items()}
        return True

    def contains(self, vec: dict) -> bool:
        return not self.reduce(vec)


def rank(vectors) -> int:
    e = Echelon()
    for v in vectors:
        e.add(v)
    return len(e)


def dense_rank(matrix, field: FieldSpec) -> int:
    return rank({j: field(x) for j, x in enumerate(row) if x} for row in matrix)


def nullspace(matrix, ncols: int, field: FieldSpec) -> list[list]:
    """Basis of {x : matrix @ x = 0} as dense vectors, via reduced row echelon form."""
    rows = [[field(x) for x in row] for row in matrix]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fcol in free:
        x = [field(0)] * ncols
        x[fcol] = field(1)
        for i, pc in enumerate(pivots):
            x[pc] = -rows[i][fcol]
        basis.append(x)
    return basis


def solve(matrix, rhs, ncols: int, field: FieldSpec):
    """One solution x of matrix @ x = rhs, or None when inconsistent."""
    aug = [[field(x) for x in row] + [field(b)] for row, b in zip(matrix, rhs)]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(aug)) if aug[i][c]), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        inv = 1 / aug[r][c]
        aug[r] = [x * inv for x in aug[r]]
        for i in range(len(aug)):
            if i != r and aug[i][c]:
                f = aug[i][c]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
    for i in range(r, len(aug)):
        if aug[i][ncols]:
            return None
    x = [field(0)] * ncols
    for i, pc in enumerate(pivots):
        x[pc] = aug[i][ncols]
    return x


def inverse(matrix, field: FieldSpec):
    """Inverse of a square dense matrix, or None when singular."""
    n = len(matrix)
    aug = [[field(x) for x in row] + [field(int(i == j)) for j in range(n)] for i, row in enumerate(matrix)]
    for c in range(n):
        piv = next((i for i in range(c, n) if aug[i][c]), None)
        if piv is None:
            return None
        aug[c], aug[piv] = aug[piv], aug[c]
        inv = 1 / aug[c][c]
        aug[c] = [x * inv for x in aug[c]]
        for i in range(n):
            if i != c and aug[i][c]:
                f = aug[i][c]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[c])]
    return [row[n:] for row in aug]
