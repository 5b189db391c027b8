"""
Weyl n-algebras on a graded symplectic space.

For ``n = 1`` the product is the Moyal product ``mu exp((c h / 2) d_omega)``
and the bracket is its graded commutator. For ``n >= 2`` only the point
class and the fundamental class of the 2-point configuration space act:
the former gives the commutative product and the latter the shifted Poisson
bracket ``c h mu d_omega``. Here ``c`` is the normalization of the volume
form, 1 by default.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from .element import Element, apply_domega, multiply
from .errors import ArgumentError, MaurerCartanError, StateError, UnsupportedArityError
from .graded import GradedSpace, check_space
from .lie import LieAlgebra, check_metric_invariance


class WeylAlgebra:
    def __init__(self, space: GradedSpace, normalization=1):
        problems = check_space(space)
        if problems:
            raise StateError("invalid graded space: " + "; ".join(problems))
        normalization = Fraction(normalization)
        if not normalization:
            raise ArgumentError("normalization must be nonzero")
        self.space = space
        self.n = space.n
        self.normalization = normalization
        self._star_cache = {}
        self._mc_ok = {}

    def __eq__(self, other):
        return (isinstance(other, WeylAlgebra) and self.space == other.space
                and self.normalization == other.normalization)

    def __hash__(self):
        return hash((self.space, self.normalization))

    def __repr__(self):
        return f"WeylAlgebra(n={self.n}, dim={self.space.dim}, normalization={self.normalization})"

    def element(self, text: str) -> Element:
        from .element import parse_element
        return parse_element(self.space, text)

    def _own(self, *elements):
        for e in elements:
            if not isinstance(e, Element) or e.space != self.space:
                raise ArgumentError("element does not belong to this Weyl algebra")

    # -- products ----------------------------------------------------------

    def _star_monomials(self, m1, m2) -> dict:
        """``m1 * m2`` as ``{(monomial, h_exponent): Fraction}``."""
        key = (m1, m2)
        hit = self._star_cache.get(key)
        if hit is not None:
            return hit
        sp = self.space
        half = self.normalization / 2
        out = {}
        layer = {(m1, m2): Fraction(1)}
        k = 0
        while layer:
            scale = half ** k / factorial(k)
            for (l, r), c in layer.items():
                s, m = sp.mono_mul(l, r)
                if s:
                    key2 = (m, k)
                    v = out.get(key2, 0) + s * c * scale
                    if v:
                        out[key2] = v
                    else:
                        out.pop(key2, None)
            nxt = {}
            for (l, r), c in layer.items():
                for i, j, w in sp.pairs:
                    a, l2 = sp.right_derivative(l, i)
                    if not a:
                        continue
                    b, r2 = sp.left_derivative(r, j)
                    if not b:
                        continue
                    key2 = (l2, r2)
                    v = nxt.get(key2, 0) + c * w * a * b
                    if v:
                        nxt[key2] = v
                    else:
                        nxt.pop(key2, None)
            layer = nxt
            k += 1
        self._star_cache[key] = out
        return out

    def star(self, a: Element, b: Element) -> Element:
        """Moyal product; only defined for ``n = 1``."""
        if self.n != 1:
            raise UnsupportedArityError(f"star product needs n = 1, got n = {self.n}")
        self._own(a, b)
        acc = {}
        for m1, c1 in a.terms():
            for m2, c2 in b.terms():
                c = c1 * c2
                for (m, k), v in self._star_monomials(m1, m2).items():
                    t = c.shift(k) * v
                    acc[m] = acc[m] + t if m in acc else t
        return Element(self.space, acc)

    def poisson(self, a: Element, b: Element) -> Element:
        """``c mu d_omega(a (x) b)``: the bracket with the factor h removed."""
        self._own(a, b)
        out = Element.zero(self.space)
        for w, left, right in apply_domega(a, b):
            out = out + multiply(left, right) * (w * self.normalization)
        return out

    def bracket(self, a: Element, b: Element) -> Element:
        self._own(a, b)
        if self.n == 1:
            out = Element.zero(self.space)
            for pa, x in _parity_parts(a).items():
                for pb, y in _parity_parts(b).items():
                    s = -1 if pa * pb else 1
                    out = out + self.star(x, y) - self.star(y, x) * s
            return out
        return self.poisson(a, b).scale_h(1)

    def product(self, a: Element, b: Element) -> Element:
        """The product carried by the point class: Moyal for n = 1, commutative otherwise."""
        return self.star(a, b) if self.n == 1 else multiply(a, b)

    # -- filtration and the W>=3 subalgebra --------------------------------

    def top_element(self) -> Element:
        """Product of all generators: the top exterior power when V is odd."""
        return Element.monomial(self.space, (1,) * self.space.dim)

    def check_top_central(self, max_degree: int = 4) -> list:
        """Monomials of degree 3..max_degree that fail to commute with the top element."""
        top = self.top_element()
        bad = []
        for w in range(3, max_degree + 1):
            for m in self.space.monomials(w):
                if self.bracket(top, Element.monomial(self.space, m)):
                    bad.append(m)
        return bad


def _parity_parts(a: Element) -> dict:
    parts = {}
    for m, c in a.terms():
        parts.setdefault(a.space.parity_of(m), {})[m] = c
    return {p: Element._wrap(a.space, t) for p, t in parts.items()}


def filtration_degree(a: Element) -> int:
    """Largest ``(number of generator factors) + (power of h)`` over the terms of ``a``."""
    if not a:
        raise ArgumentError("filtration degree of zero is undefined")
    return max(sum(m) + e for m, c in a.terms() for e in c.exponents())


def ge3_project(a: Element) -> Element:
    return a.filter(lambda m: sum(m) >= 3)


# -- metric Lie algebras --------------------------------------------------

def dual_space(lie: LieAlgebra, prefix: str = "xi") -> GradedSpace:
    """``g^dual[1]``: one degree-1 generator per basis vector, paired by the inverse metric."""
    if any(lie.degrees):
        raise ArgumentError("dual_space expects a Lie algebra concentrated in degree 0")
    names = tuple(f"{prefix}{k}" for k in range(1, lie.dim + 1))
    return GradedSpace(3, names, (1,) * lie.dim, lie.inverse_metric())


def lie_weyl_algebra(lie: LieAlgebra, normalization=1) -> WeylAlgebra:
    return WeylAlgebra(dual_space(lie), normalization)


def build_mc_element(lie: LieAlgebra, algebra: WeylAlgebra) -> Element:
    """``q = (1/6) sum c_ijk xi^i xi^j xi^k`` with ``c_ijk = g_kl c^l_ij``.

    Only invariance of the metric is required here; whether ``{q, q}``
    vanishes is left to :func:`mc_defect`.
    """
    sp = algebra.space
    if algebra.n != 3:
        raise UnsupportedArityError("the cubic Maurer-Cartan element lives in n = 3")
    if sp.dim != lie.dim or any(d != 1 for d in sp.degrees):
        raise ArgumentError("algebra is not g^dual[1] for this Lie algebra")
    if lie.metric is None:
        raise StateError("lie algebra has no metric")
    problems = [p for p in check_metric_invariance(lie)
                if p.startswith(("metric", "invariance"))]
    if problems:
        raise StateError("metric is not invariant: " + "; ".join(problems[:3]))
    q = Element.zero(sp)
    sixth = Fraction(1, 6)
    for (i, j, k), v in sorted(lie.lowered().items()):
        sign, m = 1, sp.one()
        for idx in (i, j, k):
            s, m = sp.mono_mul(m, sp.generator(idx))
            if not s:
                break
            sign *= s
        if s:
            q = q + Element.monomial(sp, m, sixth * v * sign)
    return q


def mc_defect(q: Element, algebra: WeylAlgebra) -> Element:
    """``{q, q}``; zero exactly when q is a Maurer-Cartan element."""
    return algebra.bracket(q, q)


def quantum_ce_differential(a: Element, q: Element, algebra: WeylAlgebra) -> Element:
    """``(1/h) {a, q}``."""
    if algebra.n != 3:
        raise UnsupportedArityError("the quantum CE differential is defined for n = 3")
    ok = algebra._mc_ok.get(q)
    if ok is None:
        ok = not mc_defect(q, algebra)
        algebra._mc_ok[q] = ok
    if not ok:
        raise MaurerCartanError("{q, q} != 0")
    return algebra.bracket(a, q).scale_h(-1)


def quadratic_lie_algebra(algebra: WeylAlgebra) -> tuple[LieAlgebra, list]:
    """Quadratic Hamiltonians under the Poisson bracket, as a graded Lie algebra.

    The grading is the one of ``W[n-1]``: a monomial of degree ``d`` sits in
    degree ``d - (n - 1)``. Returns the algebra and its basis monomials.
    """
    sp = algebra.space
    basis = sp.monomials(2)
    index = {m: i for i, m in enumerate(basis)}
    degrees = [sp.degree_of(m) - (sp.n - 1) for m in basis]
    brackets = {}
    for i, mi in enumerate(basis):
        for j, mj in enumerate(basis):
            b = algebra.poisson(Element.monomial(sp, mi), Element.monomial(sp, mj))
            out = {}
            for m, c in b.terms():
                if m not in index or not c.is_constant():
                    raise StateError("quadratic Hamiltonians are not closed under the bracket")
                out[index[m]] = c[0]
            if out:
                brackets[(i, j)] = out
    return LieAlgebra(len(basis), brackets, degrees, name="quadratic"), basis


def quantum_d2_failures(q: Element, algebra: WeylAlgebra, max_degree: int = 5) -> list:
    """Monomials of polynomial degree <= max_degree on which ``d o d`` is nonzero."""
    bad = []
    for w in range(max_degree + 1):
        for m in algebra.space.monomials(w):
            a = Element.monomial(algebra.space, m)
            if quantum_ce_differential(quantum_ce_differential(a, q, algebra), q, algebra):
                bad.append(m)
    return bad
