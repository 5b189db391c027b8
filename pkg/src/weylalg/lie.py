"""
Finite-dimensional graded Lie algebras given by structure constants, with an
optional invariant metric.

``brackets[(i, j)]`` is ``{k: c^k_ij}`` for basis vectors ``e_i, e_j``.
Only the pairs listed are nonzero; graded antisymmetry fills in ``(j, i)``
when it is missing.
"""

from __future__ import annotations

import json
from fractions import Fraction
from importlib import resources
from pathlib import Path

from .errors import ArgumentError
from .hseries import as_fraction
from .linalg import dense_rank, inverse


def _sign(a: int, b: int) -> int:
    return -1 if (a * b) % 2 else 1


class LieAlgebra:
    def __init__(self, dim: int, brackets=None, degrees=None, metric=None, name: str = ""):
        self.dim = int(dim)
        self.degrees = tuple(int(d) for d in degrees) if degrees is not None else (0,) * self.dim
        if len(self.degrees) != self.dim:
            raise ArgumentError("degrees must have one entry per basis vector")
        self.name = name
        table = {}
        for (i, j), out in (brackets or {}).items():
            if not (0 <= i < self.dim and 0 <= j < self.dim):
                raise ArgumentError(f"bracket index out of range: [{i},{j}]")
            vals = {}
            for k, v in out.items():
                if not 0 <= k < self.dim:
                    raise ArgumentError(f"bracket output index out of range: {k}")
                v = as_fraction(v)
                if v:
                    vals[k] = vals.get(k, 0) + v
            vals = {k: v for k, v in vals.items() if v}
            if vals:
                table[(i, j)] = vals
        # complete by graded antisymmetry where only one order was given
        self._declared = dict(table)
        for (i, j), vals in list(table.items()):
            if (j, i) not in table:
                s = -_sign(self.degrees[i], self.degrees[j])
                table[(j, i)] = {k: s * v for k, v in vals.items()}
        self.table = table
        if metric is not None:
            metric = tuple(tuple(as_fraction(x) for x in row) for row in metric)
            if len(metric) != self.dim or any(len(r) != self.dim for r in metric):
                raise ArgumentError(f"metric must be {self.dim}x{self.dim}")
        self.metric = metric

    def bracket(self, i: int, j: int) -> dict:
        return self.table.get((i, j), {})

    def bracket_vectors(self, x: dict, y: dict) -> dict:
        """Bilinear extension to ``{index: coefficient}`` vectors."""
        out = {}
        for i, a in x.items():
            for j, b in y.items():
                for k, v in self.bracket(i, j).items():
                    out[k] = out.get(k, 0) + a * b * v
        return {k: v for k, v in out.items() if v}

    @property
    def is_abelian(self) -> bool:
        return not self.table

    def structure_tensor(self) -> list:
        """Dense ``c[i][j][k] = c^k_ij``."""
        c = [[[Fraction(0)] * self.dim for _ in range(self.dim)] for _ in range(self.dim)]
        for (i, j), vals in self.table.items():
            for k, v in vals.items():
                c[i][j][k] = v
        return c

    def lowered(self) -> dict:
        """``c_ijk = g_kl c^l_ij`` as a sparse dict; needs a metric."""
        if self.metric is None:
            raise ArgumentError("lie algebra has no metric")
        out = {}
        for (i, j), vals in self.table.items():
            for k in range(self.dim):
                v = sum((self.metric[k][l] * c for l, c in vals.items()), Fraction(0))
                if v:
                    out[(i, j, k)] = v
        return out

    def inverse_metric(self) -> list:
        if self.metric is None:
            raise ArgumentError("lie algebra has no metric")
        return inverse(self.metric)

    def with_metric(self, metric) -> LieAlgebra:
        return LieAlgebra(self.dim, self._declared, self.degrees, metric, self.name)

    def to_json(self) -> dict:
        data = {
            "dim": self.dim,
            "degrees": list(self.degrees),
            "brackets": {f"[{i},{j}]": [[str(k), str(v)] for k, v in sorted(vals.items())]
                         for (i, j), vals in sorted(self._declared.items())},
        }
        if self.name:
            data["name"] = self.name
        if self.metric is not None:
            data["metric"] = [[str(x) for x in row] for row in self.metric]
        return data

    def __repr__(self):
        return f"LieAlgebra({self.name or 'dim ' + str(self.dim)})"


MetricLie = LieAlgebra


def check_lie(lie: LieAlgebra) -> list[str]:
    """Graded antisymmetry and Jacobi; empty list means the data is a Lie algebra."""
    problems = []
    deg = lie.degrees
    for (i, j), vals in lie._declared.items():
        for k in vals:
            if deg[k] != deg[i] + deg[j]:
                problems.append(f"degree: [{i},{j}] has component on {k}")
        other = lie._declared.get((j, i))
        if other is not None and i != j:
            s = -_sign(deg[i], deg[j])
            if other != {k: s * v for k, v in vals.items()}:
                problems.append(f"antisymmetry: [{i},{j}] vs [{j},{i}]")
        if i == j and not deg[i] % 2:
            problems.append(f"antisymmetry: [{i},{i}] must vanish for even e_{i}")
    # [x,[y,z]] = [[x,y],z] + (-1)^{|x||y|} [y,[x,z]]
    for a in range(lie.dim):
        for b in range(lie.dim):
            for c in range(lie.dim):
                lhs = lie.bracket_vectors({a: 1}, lie.bracket(b, c))
                r1 = lie.bracket_vectors(lie.bracket(a, b), {c: 1})
                r2 = lie.bracket_vectors({b: 1}, lie.bracket(a, c))
                s = _sign(deg[a], deg[b])
                diff = dict(lhs)
                for k, v in r1.items():
                    diff[k] = diff.get(k, 0) - v
                for k, v in r2.items():
                    diff[k] = diff.get(k, 0) - s * v
                if any(diff.values()):
                    problems.append(f"jacobi: fails on (e_{a}, e_{b}, e_{c})")
    return problems


def check_metric_invariance(lie: LieAlgebra) -> list[str]:
    """Lie axioms plus symmetry, invertibility and invariance of the metric."""
    problems = check_lie(lie)
    g = lie.metric
    if g is None:
        return problems + ["metric: missing"]
    d = lie.dim
    for i in range(d):
        for j in range(d):
            if g[i][j] != g[j][i]:
                problems.append(f"metric: not symmetric at ({i},{j})")
    if d and dense_rank(g) < d:
        problems.append("metric: degenerate")
    if any(lie.degrees):
        problems.append("metric: invariance is only checked for algebras in degree 0")
        return problems
    low = lie.lowered()
    for i in range(d):
        for j in range(d):
            for k in range(d):
                v = low.get((i, j, k), 0)
                if low.get((j, k, i), 0) != v or low.get((j, i, k), 0) != -v:
                    problems.append(f"invariance: c_ijk not totally antisymmetric at ({i},{j},{k})")
    return problems


# -- catalogue ---------------------------------------------------------------

def abelian(dim: int, metric=None) -> LieAlgebra:
    if metric is None:
        metric = [[int(i == j) for j in range(dim)] for i in range(dim)]
    return LieAlgebra(dim, {}, metric=metric, name=f"abelian({dim})")


def heisenberg() -> LieAlgebra:
    """Basis ``x, y, z`` with ``[x, y] = z``; no invariant metric exists."""
    return LieAlgebra(3, {(0, 1): {2: 1}}, name="h3")


def killing_form(lie: LieAlgebra) -> list:
    c = lie.structure_tensor()
    d = lie.dim
    return [[sum((c[i][k][l] * c[j][l][k] for k in range(d) for l in range(d)), Fraction(0))
             for j in range(d)] for i in range(d)]


def sl2() -> LieAlgebra:
    """Basis ``e, hh, f``: [hh,e] = 2e, [hh,f] = -2f, [e,f] = hh, with the Killing form."""
    base = LieAlgebra(3, {(1, 0): {0: 2}, (1, 2): {2: -2}, (0, 2): {1: 1}}, name="sl2")
    return base.with_metric(killing_form(base))


def so3() -> LieAlgebra:
    """[e_i, e_j] = eps_ijk e_k with the identity metric."""
    br = {(0, 1): {2: 1}, (1, 2): {0: 1}, (2, 0): {1: 1}}
    return LieAlgebra(3, br, metric=[[int(i == j) for j in range(3)] for i in range(3)], name="so3")


def lie_from_json(data: dict) -> LieAlgebra:
    if "dim" not in data:
        raise ArgumentError("lie json needs 'dim'")
    brackets = {}
    for key, out in data.get("brackets", {}).items():
        try:
            i, j = (int(t) for t in key.strip().strip("[]").split(","))
        except ValueError:
            raise ArgumentError(f"bad bracket key {key!r}; expected '[i,j]'") from None
        brackets[(i, j)] = {int(k): as_fraction(v) for k, v in out}
    return LieAlgebra(data["dim"], brackets, data.get("degrees"), data.get("metric"),
                      data.get("name", ""))


def load_lie(source) -> LieAlgebra:
    """Load from a path, or by catalogue name (``sl2``, ``so3``, ``h3``, ``abelian3`` ...)."""
    p = Path(str(source))
    if p.suffix == ".json" and p.exists():
        return lie_from_json(json.loads(p.read_text()))
    name = str(source)
    if name.startswith("abelian") and name[7:].strip("()").isdigit():
        return abelian(int(name[7:].strip("()")))
    try:
        text = resources.files("weylalg").joinpath("data").joinpath("lie").joinpath(f"{name}.json").read_text()
    except FileNotFoundError:
        raise ArgumentError(f"no lie algebra file or catalogue entry {source!r}") from None
    return lie_from_json(json.loads(text))
