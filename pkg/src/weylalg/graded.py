"""
Graded vector spaces with a pairing, Koszul signs, and canonical
graded-commutative monomials.

A monomial over a space with generators ``e_0 .. e_{d-1}`` is the exponent
tuple ``(a_0, .., a_{d-1})`` read as ``e_0^a_0 * e_1^a_1 * ...`` in that
order. Odd generators have exponent 0 or 1; anything else is zero and is
never constructed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

from .errors import ArgumentError
from .hseries import as_fraction

Monomial = tuple


def koszul_sign(permutation, degrees) -> int:
    """Sign of reordering graded factors.

    Position ``i`` of the result holds the original factor
    ``permutation[i]``; every pair of factors whose relative order flips
    contributes ``(-1)**(deg_a * deg_b)``.
    """
    perm = list(permutation)
    degrees = list(degrees)
    if len(perm) != len(degrees):
        raise ArgumentError("permutation and degrees differ in length")
    if sorted(perm) != list(range(len(perm))):
        raise ArgumentError(f"not a permutation: {perm}")
    odd = [degrees[p] % 2 for p in perm]
    flips = 0
    for i in range(len(perm)):
        if not odd[i]:
            continue
        for j in range(i + 1, len(perm)):
            if odd[j] and perm[i] > perm[j]:
                flips += 1
    return -1 if flips % 2 else 1


def permutation_sign(seq) -> int:
    """Sign of the permutation sorting ``seq`` (entries must be distinct)."""
    seq = list(seq)
    flips = 0
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                flips += 1
    return -1 if flips % 2 else 1


@dataclass(frozen=True)
class GradedSpace:
    """Generators with cohomological degrees and a pairing of degree ``1 - n``.

    ``pairing[i][j]`` is omega(e_i, e_j). ``symplectic`` asks for the
    pairing to be non-degenerate as well.
    """

    n: int
    names: tuple
    degrees: tuple
    pairing: tuple
    symplectic: bool = True
    _index: dict = field(default=None, compare=False, hash=False, repr=False)

    def __post_init__(self):
        names = tuple(str(x) for x in self.names)
        degrees = tuple(int(d) for d in self.degrees)
        if len(names) != len(degrees):
            raise ArgumentError("names and degrees differ in length")
        if len(set(names)) != len(names):
            raise ArgumentError(f"duplicate generator names in {names}")
        if "h" in names:
            raise ArgumentError("'h' is reserved for the deformation parameter")
        d = len(names)
        pairing = self.pairing
        if pairing is None or len(pairing) == 0:
            pairing = [[0] * d for _ in range(d)]
        if len(pairing) != d or any(len(row) != d for row in pairing):
            raise ArgumentError(f"pairing must be a {d}x{d} matrix")
        pairing = tuple(tuple(as_fraction(x) for x in row) for row in pairing)
        object.__setattr__(self, "names", names)
        object.__setattr__(self, "degrees", degrees)
        object.__setattr__(self, "pairing", pairing)
        object.__setattr__(self, "_index", {nm: i for i, nm in enumerate(names)})

    @classmethod
    def build(cls, n, generators, pairing=None, symplectic=True) -> GradedSpace:
        """``generators`` is a list of ``(name, degree)`` pairs."""
        generators = list(generators)
        return cls(n, tuple(g[0] for g in generators), tuple(g[1] for g in generators),
                   pairing, symplectic)

    @property
    def dim(self) -> int:
        return len(self.names)

    @cached_property
    def parities(self) -> tuple:
        return tuple(d % 2 for d in self.degrees)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise ArgumentError(f"unknown generator {name!r}") from None

    def omega(self, i: int, j: int) -> Fraction:
        return self.pairing[i][j]

    @cached_property
    def pairs(self) -> tuple:
        """Nonzero entries of the pairing as ``(i, j, value)``."""
        return tuple((i, j, v) for i, row in enumerate(self.pairing)
                     for j, v in enumerate(row) if v)

    def one(self) -> Monomial:
        return (0,) * self.dim

    def generator(self, i: int) -> Monomial:
        m = [0] * self.dim
        m[i] = 1
        return tuple(m)

    # -- monomial arithmetic ----------------------------------------------

    def degree_of(self, m: Monomial) -> int:
        return sum(a * d for a, d in zip(m, self.degrees))

    def parity_of(self, m: Monomial) -> int:
        return sum(a for a, p in zip(m, self.parities) if p) % 2

    @staticmethod
    def weight_of(m: Monomial) -> int:
        return sum(m)

    def mono_mul(self, m1: Monomial, m2: Monomial):
        """Return ``(sign, m1*m2)``; sign 0 when an odd generator repeats."""
        par = self.parities
        flips = 0
        odd_after = 0
        # walk right to left: odd factors of m2 at index j pass odd factors of m1 at index > j
        for j in range(len(m1) - 1, -1, -1):
            if not par[j]:
                continue
            if m1[j] and m2[j]:
                return 0, None
            if m2[j]:
                flips += odd_after
            if m1[j]:
                odd_after += 1
        m = tuple(a + b for a, b in zip(m1, m2))
        return (-1 if flips % 2 else 1), m

    def left_derivative(self, m: Monomial, i: int):
        """Return ``(coefficient, monomial)`` of d/de_i acting from the left."""
        a = m[i]
        if not a:
            return 0, None
        coef = a
        if self.parities[i]:
            before = sum(m[j] for j in range(i) if self.parities[j])
            if before % 2:
                coef = -coef
        out = list(m)
        out[i] -= 1
        return coef, tuple(out)

    def right_derivative(self, m: Monomial, i: int):
        """Return ``(coefficient, monomial)`` of d/de_i acting from the right."""
        a = m[i]
        if not a:
            return 0, None
        coef = a
        if self.parities[i]:
            after = sum(m[j] for j in range(i + 1, len(m)) if self.parities[j])
            if after % 2:
                coef = -coef
        out = list(m)
        out[i] -= 1
        return coef, tuple(out)

    def format_monomial(self, m: Monomial) -> str:
        parts = []
        for name, a in zip(self.names, m):
            parts.extend([name] * a)
        return " ".join(parts) if parts else "1"

    def monomial_from_names(self, factors) -> tuple[int, Monomial]:
        """Multiply generators in the given order; returns ``(sign, monomial)``."""
        sign, m = 1, self.one()
        for name in factors:
            s, m = self.mono_mul(m, self.generator(self.index(name)))
            if not s:
                return 0, None
            sign *= s
        return sign, m

    def monomials(self, weight: int):
        """All nonzero monomials of the given polynomial weight, in a fixed order."""
        out = []

        def rec(i, left, acc):
            if i == self.dim:
                if left == 0:
                    out.append(tuple(acc))
                return
            top = min(left, 1) if self.parities[i] else left
            for a in range(top, -1, -1):
                acc.append(a)
                rec(i + 1, left - a, acc)
                acc.pop()

        rec(0, weight, [])
        return out


def check_space(space: GradedSpace) -> list[str]:
    """Violated invariants of a graded space with pairing; empty means valid."""
    problems = []
    d = space.dim
    for i in range(d):
        for j in range(d):
            w = space.pairing[i][j]
            if w and space.degrees[i] + space.degrees[j] != space.n - 1:
                problems.append(
                    f"degree: omega({space.names[i]},{space.names[j]}) = {w} but "
                    f"{space.degrees[i]}+{space.degrees[j]} != n-1 = {space.n - 1}")
            sign = -1 if (space.degrees[i] * space.degrees[j]) % 2 else 1
            if w != -sign * space.pairing[j][i]:
                problems.append(
                    f"symmetry: omega({space.names[i]},{space.names[j]}) = {w}, "
                    f"omega({space.names[j]},{space.names[i]}) = {space.pairing[j][i]}")
    if space.symplectic and d and _rank(space.pairing) < d:
        problems.append(f"rank: pairing has rank {_rank(space.pairing)} < {d}")
    return problems


def _rank(rows) -> int:
    rows = [list(r) for r in rows]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        piv = next((r for r in range(rank, len(rows)) if rows[r][c]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        p = rows[rank][c]
        for r in range(len(rows)):
            if r != rank and rows[r][c]:
                f = rows[r][c] / p
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def standard_symplectic(pairs: int, n: int = 1, degree: int = 0, prefix=("x", "p")) -> GradedSpace:
    """``x1, p1, .., xk, pk`` with omega(x_i, p_i) = 1 = -omega(p_i, x_i)."""
    names, degs = [], []
    for k in range(1, pairs + 1):
        names += [f"{prefix[0]}{k}", f"{prefix[1]}{k}"]
        degs += [degree, n - 1 - degree]
    d = 2 * pairs
    om = [[Fraction(0)] * d for _ in range(d)]
    for k in range(pairs):
        a, b = 2 * k, 2 * k + 1
        om[a][b] = Fraction(1)
        sign = -1 if (degs[a] * degs[b]) % 2 else 1
        om[b][a] = Fraction(-sign)
    return GradedSpace(n, tuple(names), tuple(degs), tuple(map(tuple, om)))


def odd_space(dim: int, n: int = 3, degree: int = 1, prefix: str = "xi", metric=None) -> GradedSpace:
    """``dim`` generators of one odd degree with a symmetric pairing (identity by default)."""
    if metric is None:
        metric = [[Fraction(int(i == j)) for j in range(dim)] for i in range(dim)]
    names = tuple(f"{prefix}{k}" for k in range(1, dim + 1))
    return GradedSpace(n, names, (degree,) * dim, metric)
