"""
Polynomials in a free graded-commutative algebra with coefficients in
truncated Laurent series in h.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import ArgumentError, StateError
from .graded import GradedSpace, check_space
from .hseries import DEFAULT_WINDOW, HSeries, as_fraction


class Element:
    """Immutable map ``monomial -> HSeries`` over a fixed :class:`GradedSpace`."""

    __slots__ = ("space", "_terms", "_hash")

    def __init__(self, space: GradedSpace, terms=None):
        self.space = space
        clean = {}
        if terms:
            for m, c in terms.items():
                if not isinstance(c, HSeries):
                    c = HSeries.const(c)
                if c:
                    clean[tuple(m)] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _wrap(cls, space, terms):
        e = cls.__new__(cls)
        e.space = space
        e._terms = terms
        e._hash = None
        return e

    @classmethod
    def from_flat(cls, space: GradedSpace, flat, window=DEFAULT_WINDOW) -> Element:
        """Build from ``{(monomial, h_exponent): Fraction}``."""
        grouped = {}
        for (m, e), v in flat.items():
            if v:
                grouped.setdefault(m, {})[e] = v
        terms = {}
        for m, cs in grouped.items():
            lo, hi = window
            lo, hi = min(lo, min(cs)), max(hi, max(cs))
            s = HSeries(cs, (lo, hi))
            if s:
                terms[m] = s
        return cls._wrap(space, terms)

    @classmethod
    def zero(cls, space) -> Element:
        return cls._wrap(space, {})

    @classmethod
    def const(cls, space, value=1) -> Element:
        c = value if isinstance(value, HSeries) else HSeries.const(value)
        return cls(space, {space.one(): c})

    @classmethod
    def gen(cls, space, name) -> Element:
        return cls(space, {space.generator(space.index(name)): HSeries.const(1)})

    @classmethod
    def h(cls, space, power=1) -> Element:
        return cls(space, {space.one(): HSeries.monomial(power)})

    @classmethod
    def monomial(cls, space, m, coeff=1) -> Element:
        return cls(space, {tuple(m): coeff})

    # -- inspection --------------------------------------------------------

    def terms(self):
        return self._terms.items()

    def monomials(self):
        return list(self._terms)

    def coefficient(self, m) -> HSeries:
        return self._terms.get(tuple(m), HSeries())

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self):
        return not self._terms

    @property
    def truncated(self) -> bool:
        return any(c.truncated for c in self._terms.values())

    def flat(self) -> dict:
        return {(m, e): v for m, c in self._terms.items() for e, v in c.items()}

    def degrees(self) -> set:
        return {self.space.degree_of(m) for m in self._terms}

    def degree(self) -> int:
        """Cohomological degree; raises for inhomogeneous elements."""
        ds = self.degrees()
        if len(ds) != 1:
            raise ArgumentError(f"element is not homogeneous (degrees {sorted(ds)})")
        return ds.pop()

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def homogeneous_parts(self) -> dict:
        parts = {}
        for m, c in self._terms.items():
            parts.setdefault(self.space.degree_of(m), {})[m] = c
        return {d: Element._wrap(self.space, t) for d, t in parts.items()}

    def polynomial_degree(self) -> int:
        return max((sum(m) for m in self._terms), default=0)

    # -- arithmetic --------------------------------------------------------

    def _check(self, other):
        if not isinstance(other, Element):
            raise ArgumentError(f"expected Element, got {type(other).__name__}")
        if other.space != self.space:
            raise ArgumentError("elements live over different graded spaces")

    def _lift(self, other):
        if isinstance(other, (int, Fraction, HSeries)):
            return Element.const(self.space, other)
        return other

    def __add__(self, other):
        other = self._lift(other)
        self._check(other)
        out = dict(self._terms)
        for m, c in other._terms.items():
            if m in out:
                s = out[m] + c
                if s:
                    out[m] = s
                else:
                    del out[m]
            else:
                out[m] = c
        return Element._wrap(self.space, out)

    __radd__ = __add__

    def __neg__(self):
        return Element._wrap(self.space, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, HSeries)):
            return Element(self.space, {m: c * other for m, c in self._terms.items()})
        return multiply(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, HSeries)):
            return self * other
        return NotImplemented

    def scale_h(self, k: int) -> Element:
        """Multiply by h**k."""
        return Element._wrap(self.space, {m: c.shift(k) for m, c in self._terms.items()})

    def h_part(self, exponent: int) -> Element:
        """Coefficient of h**exponent as an element with constant coefficients."""
        out = {}
        for m, c in self._terms.items():
            v = c.part(exponent)
            if v:
                out[m] = HSeries.const(v)
        return Element._wrap(self.space, out)

    def filter(self, keep) -> Element:
        return Element._wrap(self.space, {m: c for m, c in self._terms.items() if keep(m)})

    def __pow__(self, k: int):
        out = Element.const(self.space, 1)
        for _ in range(k):
            out = multiply(out, self)
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Element.const(self.space, other) if other else Element.zero(self.space)
        if not isinstance(other, Element):
            return NotImplemented
        return self.space == other.space and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self):
        return f"Element({format_element(self)!r})"

    def __str__(self):
        return format_element(self)


def multiply(a: Element, b: Element) -> Element:
    """Graded-commutative product."""
    a._check(b)
    space = a.space
    out = {}
    for m1, c1 in a._terms.items():
        for m2, c2 in b._terms.items():
            s, m = space.mono_mul(m1, m2)
            if not s:
                continue
            c = c1 * c2
            if s < 0:
                c = -c
            if m in out:
                c = out[m] + c
                if c:
                    out[m] = c
                else:
                    del out[m]
            elif c:
                out[m] = c
    return Element._wrap(space, out)


def left_derivative(a: Element, i: int) -> Element:
    out = {}
    for m, c in a.terms():
        k, m2 = a.space.left_derivative(m, i)
        if k:
            out[m2] = out[m2] + c * k if m2 in out else c * k
    return Element(a.space, out)


def right_derivative(a: Element, i: int) -> Element:
    out = {}
    for m, c in a.terms():
        k, m2 = a.space.right_derivative(m, i)
        if k:
            out[m2] = out[m2] + c * k if m2 in out else c * k
    return Element(a.space, out)


def apply_domega(a: Element, b: Element) -> list:
    """The bidifferential operator that pairs one generator of each factor by omega.

    Returns ``[(weight, left, right), ...]`` with one entry per nonzero
    ``omega(e_i, e_j)`` whose derivatives survive: ``left`` is ``a``
    differentiated by ``e_i`` from the right, ``right`` is ``b`` differentiated
    by ``e_j`` from the left. Moving the derivation across ``a`` is recorded
    in the right derivative, so ``weight`` is exactly ``omega(e_i, e_j)``.
    """
    a._check(b)
    problems = check_space(a.space)
    if problems:
        raise StateError("pairing is not a valid shifted symplectic form: " + "; ".join(problems))
    out = []
    for i, j, w in a.space.pairs:
        left = right_derivative(a, i)
        if not left:
            continue
        right = left_derivative(b, j)
        if not right:
            continue
        out.append((w, left, right))
    return out


# -- text format -----------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)"
                    r"(?:\^(?P<exp>-?\d+))?|(?P<op>[-+*()]))")


def parse_element(space: GradedSpace, text: str) -> Element:
    """Parse ``"x*p + h/2 - 3/4 x^2 xi1 xi2"``; juxtaposition multiplies in order."""
    tokens = []
    pos = 0
    text = _fix_division(text.strip())
    while pos < len(text):
        mt = _TOKEN.match(text, pos)
        if not mt or mt.end() == pos:
            raise ArgumentError(f"cannot parse element at {text[pos:]!r}")
        pos = mt.end()
        if mt.group("num"):
            tokens.append(("num", Fraction(mt.group("num"))))
        elif mt.group("name"):
            e = int(mt.group("exp")) if mt.group("exp") else 1
            tokens.append(("name", mt.group("name"), e))
        else:
            tokens.append(("op", mt.group("op")))
    merged = tokens
    result = Element.zero(space)
    sign = 1
    term = None
    expect_term = True

    def flush():
        nonlocal result, term
        if term is not None:
            result = result + term * sign
        term = None

    i = 0
    while i < len(merged):
        t = merged[i]
        if t[0] == "op" and t[1] in "+-":
            if term is None and not expect_term:
                raise ArgumentError(f"dangling operator in {text!r}")
            flush()
            sign = 1 if t[1] == "+" else -1
            if i + 1 < len(merged) and merged[i + 1] == ("op", "-"):
                raise ArgumentError(f"double sign in {text!r}")
            expect_term = True
        elif t[0] == "op" and t[1] == "*":
            pass
        elif t[0] == "op":
            raise ArgumentError("parentheses are not supported")
        elif t[0] == "num":
            f = Element.const(space, t[1])
            term = f if term is None else term * f
            expect_term = False
        else:
            _, name, e = t
            if name == "h":
                f = Element.h(space, e)
            else:
                if e < 0:
                    raise ArgumentError(f"negative power of generator {name}")
                f = Element.gen(space, name) ** e
            term = f if term is None else term * f
            expect_term = False
        i += 1
    if tokens and expect_term:
        raise ArgumentError(f"dangling operator in {text!r}")
    flush()
    return result


def _fix_division(text: str) -> str:
    # "h/2" style: a name followed by /den becomes "1/den * name"
    return re.sub(r"([A-Za-z_][A-Za-z_0-9]*(?:\^-?\d+)?)\s*/\s*(\d+)", r"1/\2 \1", text)


parse = parse_element


def sorted_terms(a: Element):
    """Terms ordered by descending polynomial weight, then descending exponents."""
    return sorted(a.terms(), key=lambda t: (-sum(t[0]), tuple(-x for x in t[0])))


def format_element(a: Element) -> str:
    if not a:
        return "0"
    parts = []
    for m, c in sorted_terms(a):
        mono = "*".join(nm if k == 1 else f"{nm}^{k}"
                        for nm, k in zip(a.space.names, m) if k) or "1"
        cs = str(c)
        if mono == "1":
            parts.append(f"({cs})" if len(c) > 1 else cs)
        elif cs == "1":
            parts.append(mono)
        elif cs == "-1":
            parts.append("-" + mono)
        else:
            parts.append(f"({cs})*{mono}" if len(c) > 1 else f"{cs}*{mono}")
    out = parts[0]
    for p in parts[1:]:
        out += " - " + p[1:] if p.startswith("-") else " + " + p
    return out


def to_pairs(a: Element) -> list:
    """``[[monomial, coefficient], ...]`` with both rendered as strings."""
    return [[a.space.format_monomial(m), str(c)] for m, c in sorted_terms(a)]


def to_json_terms(a: Element) -> list:
    out = []
    for m, c in sorted_terms(a):
        factors = []
        for name, k in zip(a.space.names, m):
            factors.extend([name] * k)
        out.append({"coeff": {str(e): str(v) for e, v in c.items()}, "monomial": factors})
    return out


def from_json_terms(space: GradedSpace, data) -> Element:
    out = Element.zero(space)
    for t in data:
        sign, m = space.monomial_from_names(t["monomial"])
        if not sign:
            continue
        coeff = HSeries({int(e): as_fraction(v) for e, v in t["coeff"].items()},
                        (min([DEFAULT_WINDOW[0]] + [int(e) for e in t["coeff"]]),
                         max([DEFAULT_WINDOW[1]] + [int(e) for e in t["coeff"]])))
        out = out + Element(space, {m: coeff * sign})
    return out
