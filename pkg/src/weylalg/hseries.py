"""
Truncated formal Laurent series in the deformation parameter h.

A series stores finitely many nonzero rational coefficients inside an
exponent window ``[lo, hi]``. Anything that would land outside the window
is dropped and the ``truncated`` flag is raised, so callers can tell an
exact result from a clipped one.

Window rules: a sum lives in the intersection of the operand windows, a
product in their Minkowski sum.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational

DEFAULT_WINDOW = (-8, 8)


def as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"not an exact rational: {x!r}")


class HSeries:
    __slots__ = ("_c", "lo", "hi", "truncated", "_hash")

    def __init__(self, coeffs=None, window=DEFAULT_WINDOW, truncated=False):
        lo, hi = window
        if lo > hi:
            raise ValueError(f"empty window [{lo}, {hi}]")
        c = {}
        clipped = False
        if coeffs:
            for e, v in coeffs.items():
                v = as_fraction(v)
                if not v:
                    continue
                if e < lo or e > hi:
                    clipped = True
                    continue
                c[int(e)] = v
        self._c = c
        self.lo = lo
        self.hi = hi
        self.truncated = truncated or clipped
        self._hash = None

    @classmethod
    def _raw(cls, c, lo, hi, truncated):
        s = cls.__new__(cls)
        s._c = c
        s.lo = lo
        s.hi = hi
        s.truncated = truncated
        s._hash = None
        return s

    @classmethod
    def const(cls, value, window=DEFAULT_WINDOW) -> HSeries:
        return cls({0: value}, window)

    @classmethod
    def monomial(cls, exponent: int, value=1, window=DEFAULT_WINDOW) -> HSeries:
        return cls({exponent: value}, window)

    # -- inspection --------------------------------------------------------

    @property
    def window(self) -> tuple[int, int]:
        return (self.lo, self.hi)

    def items(self):
        return sorted(self._c.items())

    def exponents(self) -> list[int]:
        return sorted(self._c)

    def __getitem__(self, e: int) -> Fraction:
        return self._c.get(e, Fraction(0))

    def __len__(self):
        return len(self._c)

    def __bool__(self):
        return bool(self._c)

    def is_zero(self) -> bool:
        return not self._c

    def valuation(self) -> int | None:
        return min(self._c) if self._c else None

    def top(self) -> int | None:
        return max(self._c) if self._c else None

    def is_constant(self) -> bool:
        return not self._c or set(self._c) == {0}

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other) -> HSeries | None:
        if isinstance(other, HSeries):
            return other
        if isinstance(other, (int, Fraction)):
            return HSeries({0: other}, (min(self.lo, 0), max(self.hi, 0)))
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        lo, hi = max(self.lo, other.lo), min(self.hi, other.hi)
        if lo > hi:
            raise ValueError("series windows do not overlap")
        c = {}
        clipped = False
        for src in (self._c, other._c):
            for e, v in src.items():
                if e < lo or e > hi:
                    clipped = True
                    continue
                s = c.get(e, 0) + v
                if s:
                    c[e] = s
                else:
                    c.pop(e, None)
        return HSeries._raw(c, lo, hi, self.truncated or other.truncated or clipped)

    __radd__ = __add__

    def __neg__(self):
        return HSeries._raw({e: -v for e, v in self._c.items()}, self.lo, self.hi, self.truncated)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return HSeries._raw({}, self.lo, self.hi, self.truncated)
            return HSeries._raw({e: v * other for e, v in self._c.items()}, self.lo, self.hi, self.truncated)
        if not isinstance(other, HSeries):
            return NotImplemented
        c = {}
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                e = e1 + e2
                s = c.get(e, 0) + v1 * v2
                if s:
                    c[e] = s
                else:
                    c.pop(e, None)
        return HSeries._raw(c, self.lo + other.lo, self.hi + other.hi, self.truncated or other.truncated)

    __rmul__ = __mul__

    def shift(self, k: int) -> HSeries:
        """Multiply by h**k; the window moves along."""
        return HSeries._raw({e + k: v for e, v in self._c.items()}, self.lo + k, self.hi + k, self.truncated)

    def truncate(self, window: tuple[int, int]) -> HSeries:
        return HSeries(self._c, window, self.truncated)

    def part(self, exponent: int) -> Fraction:
        return self._c.get(exponent, Fraction(0))

    # -- comparison --------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, HSeries):
            return self._c == other._c
        if isinstance(other, (int, Fraction)):
            return self._c == ({0: Fraction(other)} if other else {})
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    def __repr__(self):
        return f"HSeries({format_hseries(self)!r}, window={self.window})"

    def __str__(self):
        return format_hseries(self)


def _term(c: Fraction, e: int) -> str:
    if e == 0:
        return str(c)
    base = "h" if e == 1 else f"h^{e}"
    num, den = c.numerator, c.denominator
    sign = "-" if num < 0 else ""
    num = abs(num)
    head = base if num == 1 else f"{num}*{base}"
    if den != 1:
        head = f"{head}/{den}"
    return sign + head


def format_hseries(s: HSeries) -> str:
    """Render as e.g. ``1/2 - h/2 + 3*h^2``; the zero series is ``0``."""
    if not s:
        return "0"
    out = ""
    for e, c in sorted(s.items(), key=lambda t: t[0]):
        t = _term(c, e)
        if not out:
            out = t
        elif t.startswith("-"):
            out += " - " + t[1:]
        else:
            out += " + " + t
    return out
