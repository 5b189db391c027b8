"""
Factorization homology of closed manifolds with coefficients in free
commutative and Weyl n-algebras, at the level of rational Betti data.

For a Weyl algebra on (V, omega) the E^1 page is the Koszul complex on
``W = H_*(M) (x) V`` with differential ``d_K = sum_{a<b} Omega(w_a, w_b)
d_a d_b``, where ``H_i`` sits in degree ``-i`` and ``Omega`` pairs
``a (x) x`` with ``b (x) y`` by ``PD(a, b) omega(x, y)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .element import Element
from .errors import ArgumentError, StateError
from .graded import GradedSpace, _rank
from .linalg import SparseMatrix, rank


@dataclass(frozen=True)
class ManifoldHomology:
    dim: int
    betti: tuple
    oriented: bool = True

    def __post_init__(self):
        betti = tuple(int(b) for b in self.betti)
        if len(betti) != self.dim + 1:
            raise ArgumentError(f"need {self.dim + 1} Betti numbers, got {len(betti)}")
        if any(b < 0 for b in betti):
            raise ArgumentError("Betti numbers must be non-negative")
        if betti[0] < 1:
            raise ArgumentError("b_0 must be at least 1")
        object.__setattr__(self, "betti", betti)

    @classmethod
    def sphere(cls, n: int) -> ManifoldHomology:
        return cls(n, tuple(int(i in (0, n)) for i in range(n + 1)))

    @classmethod
    def from_json(cls, data: dict) -> ManifoldHomology:
        if "dim" not in data or "betti" not in data:
            raise ArgumentError("manifold json needs 'dim' and 'betti'")
        return cls(int(data["dim"]), tuple(data["betti"]), bool(data.get("oriented", True)))

    def to_json(self) -> dict:
        return {"betti": list(self.betti), "dim": self.dim, "oriented": self.oriented}

    def is_poincare_dual(self) -> bool:
        return all(self.betti[i] == self.betti[self.dim - i] for i in range(self.dim + 1))

    def is_rational_homology_sphere(self) -> bool:
        return self.betti == tuple(int(i in (0, self.dim)) for i in range(self.dim + 1))


def _dims_by_degree(space: GradedSpace) -> dict:
    out = {}
    for d in space.degrees:
        out[d] = out.get(d, 0) + 1
    return out


def weyl_degree_formula(M: ManifoldHomology, V: GradedSpace) -> int:
    """``sum_{i + j odd} (j - i) b_i dim V_j``."""
    if M.dim != V.n:
        raise ArgumentError(f"manifold dimension {M.dim} differs from n = {V.n}")
    total = 0
    for j, dv in _dims_by_degree(V).items():
        for i, b in enumerate(M.betti):
            if (i + j) % 2:
                total += (j - i) * b * dv
    return total


def homology_tensor_space(M: ManifoldHomology, V: GradedSpace) -> GradedSpace:
    """``W = H_*(M) (x) V`` with the pairing ``PD (x) omega``.

    Generator ``H{i}_{r}.{x}`` is the r-th basis class of ``H_i`` tensored
    with generator x, in degree ``|x| - i``. PD pairs the r-th class of
    ``H_i`` with the r-th class of ``H_{n-i}``.
    """
    names, degs, slots = [], [], []
    for i, b in enumerate(M.betti):
        for r in range(b):
            for k, x in enumerate(V.names):
                names.append(f"H{i}_{r}.{x}")
                degs.append(V.degrees[k] - i)
                slots.append((i, r, k))
    d = len(names)
    om = [[Fraction(0)] * d for _ in range(d)]
    for a, (i, r, k) in enumerate(slots):
        for c, (i2, r2, k2) in enumerate(slots):
            if i + i2 == M.dim and r == r2:
                om[a][c] = V.pairing[k][k2]
    return GradedSpace(0, tuple(names), tuple(degs), om, symplectic=False)


def commutative_fact_hom(M: ManifoldHomology, V: GradedSpace, weight_cutoff: int) -> dict:
    """``{weight: {degree: dim}}`` of the free graded-commutative algebra on ``H_*(M) (x) V``."""
    W = homology_tensor_space(M, V)
    table = {}
    for w in range(weight_cutoff + 1):
        row = {}
        for m in W.monomials(w):
            deg = W.degree_of(m)
            row[deg] = row.get(deg, 0) + 1
        table[w] = dict(sorted(row.items()))
    return table


class KoszulModel:
    """``(S(W), d_K)`` for a space W whose pairing has degree 1."""

    def __init__(self, W: GradedSpace):
        if W.dim and _rank(W.pairing) < W.dim:
            raise StateError("pairing on W is degenerate")
        for a, b, _ in W.pairs:
            if W.degrees[a] + W.degrees[b] != -1:
                raise StateError(f"pairing of {W.names[a]} and {W.names[b]} is not of degree 1")
        self.W = W
        self.pairs = [(a, b, v) for a, b, v in W.pairs if a < b]
        self._slices = {}

    @classmethod
    def for_manifold(cls, M: ManifoldHomology, V: GradedSpace) -> KoszulModel:
        if not M.oriented:
            raise StateError("Poincare duality pairing needs an oriented manifold")
        if M.dim != V.n:
            raise ArgumentError(f"manifold dimension {M.dim} differs from n = {V.n}")
        return cls(homology_tensor_space(M, V))

    def apply(self, m) -> dict:
        """``d_K`` of one monomial as ``{monomial: Fraction}``."""
        W = self.W
        out = {}
        for a, b, v in self.pairs:
            c1, m1 = W.left_derivative(m, b)
            if not c1:
                continue
            c2, m2 = W.left_derivative(m1, a)
            if not c2:
                continue
            x = out.get(m2, 0) + v * c1 * c2
            if x:
                out[m2] = x
            else:
                out.pop(m2, None)
        return out

    def _by_degree(self, weight: int) -> dict:
        if weight not in self._slices:
            table = {}
            if weight >= 0:
                for m in self.W.monomials(weight):
                    table.setdefault(self.W.degree_of(m), []).append(m)
            self._slices[weight] = table
        return self._slices[weight]

    def basis(self, weight: int, degree: int) -> list:
        return self._by_degree(weight).get(degree, [])

    def degrees(self, weight: int) -> list:
        return sorted(self._by_degree(weight))

    def matrix(self, weight: int, degree: int) -> SparseMatrix:
        """``d_K`` from the (weight, degree) slice to (weight - 2, degree + 1)."""
        src = self.basis(weight, degree)
        tgt = self.basis(weight - 2, degree + 1) if weight >= 2 else []
        index = {t: i for i, t in enumerate(tgt)}
        cols = []
        for m in src:
            col = {}
            for t, v in self.apply(m).items():
                col[index[t]] = v
            cols.append(col)
        return SparseMatrix.from_columns(len(tgt), cols)

    def d_squared_zero(self, weight_cutoff: int) -> bool:
        for w in range(4, weight_cutoff + 1):
            for deg in self.degrees(w):
                if self.basis(w - 4, deg + 2) and self.basis(w, deg):
                    if not (self.matrix(w - 2, deg + 1) @ self.matrix(w, deg)).is_zero():
                        return False
        return True

    def odd_product(self) -> tuple:
        """Monomial of all odd basis vectors of W and its degree."""
        m = tuple(p for p in self.W.parities)
        return m, self.W.degree_of(m)


@dataclass
class KoszulResult:
    ranks: dict
    total_rank: int
    degree: int | None
    representative: tuple | None
    formula_degree: int
    cutoff: int


def koszul_homology(model: KoszulModel, weight_cutoff: int) -> dict:
    """``{(weight, degree): rank}`` for weights up to the cutoff, zero ranks omitted."""
    ranks = {}
    for w in range(weight_cutoff + 1):
        for deg in model.degrees(w):
            n = len(model.basis(w, deg))
            r_out = model.matrix(w, deg).rank() if w >= 2 and model.basis(w - 2, deg + 1) else 0
            r_in = model.matrix(w + 2, deg - 1).rank() if model.basis(w + 2, deg - 1) else 0
            if n - r_out - r_in:
                ranks[(w, deg)] = n - r_out - r_in
    return ranks


def represents_class(model: KoszulModel, m) -> bool:
    """True when monomial ``m`` is a cycle that is not a boundary."""
    if model.apply(m):
        return False
    w, deg = sum(m), model.W.degree_of(m)
    image = model.matrix(w + 2, deg - 1)
    index = {t: i for i, t in enumerate(model.basis(w, deg))}
    rows = list(image.transpose().rows.values())
    return rank(rows + [{index[m]: Fraction(1)}]) > rank(rows)


def koszul_verify(M: ManifoldHomology, V: GradedSpace, weight_cutoff: int = 6) -> KoszulResult:
    """Homology of the Koszul model in weights up to the cutoff.

    When the total rank is one, ``representative`` is the product of the
    odd basis vectors of W provided it spans the surviving class.
    """
    model = KoszulModel.for_manifold(M, V)
    ranks = koszul_homology(model, weight_cutoff)
    total = sum(ranks.values())
    degree = rep = None
    if total == 1:
        (_w, degree), = ranks
        m, d = model.odd_product()
        if sum(m) <= weight_cutoff and d == degree and represents_class(model, m):
            rep = m
    return KoszulResult(ranks, total, degree, rep, weyl_degree_formula(M, V), weight_cutoff)


def standard_cycle(M: ManifoldHomology, V: GradedSpace) -> Element:
    """Product of all generators of V: the point of M marked by the top power of V."""
    if not M.is_rational_homology_sphere() or M.dim % 2 == 0:
        raise ArgumentError("standard cycle needs a rational homology sphere of odd dimension")
    if any(d % 2 == 0 for d in V.degrees):
        raise ArgumentError("standard cycle needs V concentrated in odd degrees")
    return Element.monomial(V, (1,) * V.dim)
