"""Exact ground fields: the rationals and prime fields GF(p)."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational


class FieldMismatchError(ValueError):
    pass


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


class GF:
    """A residue modulo a prime, always stored in canonical form ``0 <= value < p``."""

    __slots__ = ("value", "p")

    def __init__(self, value, p: int):
        if isinstance(value, GF):
            if value.p != p:
                raise FieldMismatchError(f"GF({value.p}) element used in GF({p})")
            value = value.value
        elif isinstance(value, Fraction):
            if value.denominator % p == 0:
                raise ZeroDivisionError(f"{value} has no image in GF({p})")
            value = value.numerator * pow(value.denominator, -1, p)
        self.value = int(value) % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, GF):
            if other.p != self.p:
                raise FieldMismatchError(f"GF({self.p}) vs GF({other.p})")
            return other.value
        if isinstance(other, int):
            return other
        if isinstance(other, Fraction):
            return GF(other, self.p).value
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GF(self.value + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GF(self.value - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GF(o - self.value, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GF(self.value * o, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o % self.p == 0:
            raise ZeroDivisionError(f"division by zero in GF({self.p})")
        return GF(self.value * pow(o, -1, self.p), self.p)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GF(o, self.p) / self

    def __neg__(self):
        return GF(-self.value, self.p)

    def __pos__(self):
        return self

    def __pow__(self, e: int):
        if e < 0:
            return GF(pow(self.value, -1, self.p), self.p) ** (-e)
        return GF(pow(self.value, e, self.p), self.p)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self.value - o) % self.p == 0

    def __hash__(self):
        return hash((self.value, self.p))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"GF({self.value}, {self.p})"

    def __str__(self):
        return str(self.value)


@dataclass(frozen=True)
class FieldSpec:
    """The ground field: characteristic 0 means Q, otherwise GF(p)."""

    characteristic: int = 0

    def __post_init__(self):
        c = self.characteristic
        if c != 0 and not _is_prime(c):
            raise ValueError(f"characteristic must be 0 or a prime, got {c}")

    @property
    def kind(self) -> str:
        return "rationals" if self.characteristic == 0 else "prime-field"

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        t = text.strip().lower()
        if t in ("q", "qq", "rationals"):
            return cls(0)
        if t.startswith("fp:"):
            try:
                p = int(t[3:])
            except ValueError:
                raise ValueError(f"bad field spec {text!r}") from None
            return cls(p)
        raise ValueError(f"bad field spec {text!r}; expected 'q' or 'fp:<p>'")

    def __str__(self):
        return "q" if self.characteristic == 0 else f"fp:{self.characteristic}"

    def __call__(self, x=0):
        """Coerce ``x`` (int, Fraction, string, or field element) into this field."""
        if isinstance(x, str):
            return self.parse_scalar(x)
        if self.characteristic == 0:
            if isinstance(x, GF):
                raise FieldMismatchError("GF element used over Q")
            if isinstance(x, (int, Rational)):
                return Fraction(x)
            raise TypeError(f"cannot coerce {x!r} into Q")
        if isinstance(x, (int, Fraction, GF)):
            return GF(x, self.characteristic)
        raise TypeError(f"cannot coerce {x!r} into GF({self.characteristic})")

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def contains(self, x) -> bool:
        if self.characteristic == 0:
            return isinstance(x, Fraction)
        return isinstance(x, GF) and x.p == self.characteristic

    def parse_scalar(self, text: str):
        text = text.strip()
        if self.characteristic == 0:
            return Fraction(text)
        return GF(Fraction(text), self.characteristic)

    def format_scalar(self, x) -> str:
        return str(self(x))
