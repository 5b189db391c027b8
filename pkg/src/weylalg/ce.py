"""
Chevalley-Eilenberg chains ``S(g[1])`` (optionally tensored with the adjoint
module) with the coderivation differential, and the same complex assembled
from decorated bushes.

Chains are dicts ``{factors: coeff}`` where ``factors`` is a sorted tuple of
basis keys of ``g[1]``; odd keys never repeat. Adjoint chains use keys
``(factors, y)`` where ``y`` is a basis vector of the shifted module
``g[1]`` kept after the symmetric factors. The shifted bracket is
``l2(sx, sy) = (-1)^|x| s[x, y]``; the module differential is the part of
the CE differential of ``g + g[1]`` (semidirect, second summand abelian)
that is linear in the second summand.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import ArgumentError, StateError
from .graded import GradedSpace, koszul_sign
from .lie import LieAlgebra, check_lie
from .linalg import SparseMatrix
from .operad import Bush, bush_differential


def _add(acc, key, value):
    v = acc.get(key, 0) + value
    if v:
        acc[key] = v
    else:
        acc.pop(key, None)


def sym_normalize(factors, parity):
    """Sort factors into canonical order; returns ``(sign, tuple)`` or ``(0, None)``."""
    factors = list(factors)
    order = sorted(range(len(factors)), key=lambda i: factors[i])
    out = tuple(factors[i] for i in order)
    for a, b in zip(out, out[1:]):
        if a == b and parity(a):
            return 0, None
    return koszul_sign(order, [parity(f) for f in factors]), out


def ce_boundary(chain: dict, l2, parity) -> dict:
    """Coderivation of ``l2`` on ``S(L[1])``.

    ``l2(a, b)`` returns ``{key: coeff}`` for basis keys of ``L[1]``;
    ``parity(key)`` is the parity in ``L[1]``.
    """
    out = {}
    for factors, c in chain.items():
        w = len(factors)
        par = [parity(f) for f in factors]
        for p in range(w):
            for q in range(p + 1, w):
                rest = [i for i in range(w) if i != p and i != q]
                sign = koszul_sign([p, q] + rest, par)
                tail = [factors[i] for i in rest]
                for k, v in l2(factors[p], factors[q]).items():
                    s, key = sym_normalize([k] + tail, parity)
                    if s:
                        _add(out, key, c * sign * s * v)
    return out


def ce_boundary_adjoint(chain: dict, l2, act, parity, module_parity) -> dict:
    """Boundary on ``S(L[1]) (x) M[1]`` for a module ``M``.

    This is the part of the CE boundary of ``L + M`` (M an abelian ideal)
    that is linear in ``M[1]``, with the module factor kept last.
    ``act(a, y)`` is the shifted action ``{y': coeff}``, the analogue of
    ``l2`` with one argument in ``M[1]``.
    """
    out = {}
    for (factors, y), c in chain.items():
        for key, v in ce_boundary({factors: c}, l2, parity).items():
            _add(out, (key, y), v)
        w = len(factors)
        par = [parity(f) for f in factors]
        py = module_parity(y)
        total = sum(par)
        for i in range(w):
            rest = [j for j in range(w) if j != i]
            sign = koszul_sign([i, w] + rest, par + [py])
            back = (par[i] + py + 1) * (total - par[i])
            if back % 2:
                sign = -sign
            tail = tuple(factors[j] for j in rest)
            for y2, v in act(factors[i], y).items():
                _add(out, (tail, y2), c * sign * v)
    return out


# -- finite-dimensional Lie algebras ----------------------------------------

def shifted_bracket(lie: LieAlgebra):
    def l2(i, j):
        s = -1 if lie.degrees[i] % 2 else 1
        return {k: s * v for k, v in lie.bracket(i, j).items()}
    return l2


def shifted_parity(lie: LieAlgebra):
    return lambda i: (lie.degrees[i] + 1) % 2


def chain_space(lie: LieAlgebra) -> GradedSpace:
    """``g[1]`` as a graded space, used to enumerate symmetric monomials."""
    return GradedSpace(0, tuple(f"s{i}" for i in range(lie.dim)),
                       tuple(d - 1 for d in lie.degrees), None, symplectic=False)


def _factors(m) -> tuple:
    out = []
    for i, a in enumerate(m):
        out.extend([i] * a)
    return tuple(out)


def ce_basis(lie: LieAlgebra, weight: int, coefficients: str = "trivial") -> list:
    sp = chain_space(lie)
    sym = sorted(_factors(m) for m in sp.monomials(weight))
    if coefficients == "trivial":
        return sym
    if coefficients == "adjoint":
        return [(f, y) for f in sym for y in range(lie.dim)]
    raise ArgumentError(f"unknown coefficients {coefficients!r}")


@dataclass
class CEComplex:
    """CE chains by weight with ``d_w: C_w -> C_{w-1}``.

    ``bases`` runs to ``cutoff + 1`` so that homology up to the cutoff is
    exact; the extra weight is never reported.
    """

    lie: LieAlgebra
    coefficients: str
    cutoff: int
    bases: dict
    matrices: dict = field(default_factory=dict)

    def dims(self) -> dict:
        return {w: len(self.bases[w]) for w in range(self.cutoff + 1)}

    def degree_of(self, key) -> int:
        deg = self.lie.degrees
        if self.coefficients == "adjoint":
            factors, y = key
            return sum(deg[i] - 1 for i in factors) + deg[y]
        return sum(deg[i] - 1 for i in key)

    def d_squared_zero(self) -> bool:
        for w in range(2, self.cutoff + 2):
            if not (self.matrices[w - 1] @ self.matrices[w]).is_zero():
                return False
        return True


def _matrix(source, target, boundary) -> SparseMatrix:
    index = {t: i for i, t in enumerate(target)}
    cols = []
    for s in source:
        col = {}
        for t, v in boundary(s).items():
            col[index[t]] = v
        cols.append(col)
    return SparseMatrix.from_columns(len(target), cols)


def _require_lie(lie: LieAlgebra, cutoff: int):
    if cutoff < 1:
        raise ArgumentError("weight cutoff must be at least 1")
    problems = check_lie(lie)
    if problems:
        raise StateError("not a Lie algebra: " + "; ".join(problems[:3]))


def build_ce_complex(lie: LieAlgebra, coefficients: str = "trivial", weight_cutoff: int = 3) -> CEComplex:
    _require_lie(lie, weight_cutoff)
    l2, par = shifted_bracket(lie), shifted_parity(lie)
    bases = {w: ce_basis(lie, w, coefficients) for w in range(weight_cutoff + 2)}
    cx = CEComplex(lie, coefficients, weight_cutoff, bases)
    if coefficients == "trivial":
        def boundary(key):
            return ce_boundary({key: Fraction(1)}, l2, par)
    else:
        def boundary(key):
            return ce_boundary_adjoint({key: Fraction(1)}, l2, l2, par, par)
    for w in range(1, weight_cutoff + 2):
        cx.matrices[w] = _matrix(bases[w], bases[w - 1], boundary)
    return cx


@dataclass
class HomologyResult:
    ranks: dict
    dims: dict
    by_degree: dict = field(default_factory=dict)

    def euler_characteristic(self) -> int:
        return sum((-1) ** w * r for w, r in self.ranks.items())

    def basis_euler_characteristic(self) -> int:
        return sum((-1) ** w * d for w, d in self.dims.items())

    def total(self) -> int:
        return sum(self.ranks.values())


def homology(cx: CEComplex) -> HomologyResult:
    """Ranks ``dim ker d_w - rank d_{w+1}`` for weights ``0..cutoff``."""
    rank = {w: cx.matrices[w].rank() for w in range(1, cx.cutoff + 2)}
    ranks = {}
    for w in range(cx.cutoff + 1):
        ranks[w] = len(cx.bases[w]) - rank.get(w, 0) - rank[w + 1]
    return HomologyResult(ranks, cx.dims())


# -- the bush model -----------------------------------------------------------

def _bush_boundary(key, coefficients, par, l2):
    """Boundary of one decorated bush with no internal vertices."""
    adjoint = coefficients == "adjoint"
    factors, y = key if adjoint else (key, None)
    decor = list(factors) + ([y] if adjoint else [])
    parities = [par(f) for f in decor]
    w = len(factors)
    leaves = frozenset(range(len(decor)))
    start = Bush(leaves, frozenset(), frozenset([w]) if adjoint else None)
    out = {}
    for b, sign in bush_differential({start: Fraction(1)}).items():
        (vertex,) = b.family
        inputs = sorted(vertex)
        if len(inputs) != 2:
            continue  # a Lie algebra has no higher operations
        rest = [j for j in range(len(decor)) if j not in vertex]
        s = sign * koszul_sign(inputs + rest, parities)
        value = l2(decor[inputs[0]], decor[inputs[1]])
        if b.marked == vertex:
            # the new vertex absorbs the module element; its output is moved back to the end
            p_new = (sum(parities[j] for j in inputs) + 1) % 2
            if p_new * sum(parities[j] for j in rest) % 2:
                s = -s
            tail = tuple(decor[j] for j in rest)
            for y2, v in value.items():
                _add(out, (tail, y2), s * v)
            continue
        tail = [decor[j] for j in rest if j < w]
        for k, v in value.items():
            s2, new = sym_normalize([k] + tail, par)
            if s2:
                _add(out, (new, y) if adjoint else new, s * s2 * v)
    return out


def ce_via_bushes(lie: LieAlgebra, coefficients: str = "trivial", weight_cutoff: int = 3) -> CEComplex:
    """The CE complex as decorated bushes tensored over the tree operad.

    A weight-w chain is a bush with w leaves and no internal vertex whose
    leaves carry basis vectors (and, for the adjoint module, an extra marked
    leaf carrying the module element). The bush differential creates one
    internal vertex, which is then evaluated by the bracket, or by the
    action when it absorbs the marked leaf.
    """
    _require_lie(lie, weight_cutoff)
    l2, par = shifted_bracket(lie), shifted_parity(lie)
    bases = {w: ce_basis(lie, w, coefficients) for w in range(weight_cutoff + 2)}
    cx = CEComplex(lie, coefficients, weight_cutoff, bases)
    for w in range(1, weight_cutoff + 2):
        cx.matrices[w] = _matrix(bases[w], bases[w - 1],
                                 lambda key: _bush_boundary(key, coefficients, par, l2))
    return cx


def cochain_differential_matrix(cx: CEComplex, weight: int) -> SparseMatrix:
    """Transpose of ``d_{weight+1}``: the cochain differential in the dual basis."""
    return cx.matrices[weight + 1].transpose()


def classical_mismatches(lie: LieAlgebra, q, algebra) -> list:
    """Compare ``(1/h){., q}`` on ``Lambda g^dual`` with the transposed CE boundary.

    Cochain monomials ``xi^i1 .. xi^iw`` (ascending) are dual to chains
    ``s e_i1 .. s e_iw`` in the same order. Returns the mismatching
    cochain monomials; the h^0 part of the quantum differential is used.
    """
    from .element import Element
    from .weyl import quantum_ce_differential

    cx = build_ce_complex(lie, "trivial", lie.dim)
    sp = algebra.space
    bad = []
    for w in range(lie.dim):
        d = cx.matrices[w + 1]
        target = cx.bases[w + 1]
        for j, f in enumerate(cx.bases[w]):
            m = tuple(1 if i in f else 0 for i in range(lie.dim))
            image = quantum_ce_differential(Element.monomial(sp, m), q, algebra).h_part(0)
            got = {mm: c[0] for mm, c in image.terms()}
            expected = {}
            for i, g in enumerate(target):
                v = d[j, i]
                if v:
                    expected[tuple(1 if k in g else 0 for k in range(lie.dim))] = v
            if got != expected:
                bad.append(m)
    return bad
