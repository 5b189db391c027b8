"""
Rooted trees, bushes and marked bushes as nested set families.

A tree on a leaf set S is stored as the family of leaf sets of its non-top
internal vertices: proper subsets of size at least 2, pairwise nested or
disjoint. Each member stands for the internal edge leaving that vertex
towards the root. The star is the empty family. A bush may also contain S
itself, because its root accepts many incoming edges; every member of a
bush family is an edge not incident to a leaf.

Chains are dicts ``{structure: Fraction}`` whose coefficient refers to the
canonical edge order (by size, then by sorted labels). An explicit edge
ordering is converted with the sign of the sorting permutation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .errors import ArgumentError
from .graded import permutation_sign
from .linalg import SparseMatrix


def _label_key(x):
    return (type(x).__name__, x)


def _edge_key(e: frozenset):
    return (len(e), tuple(sorted(_label_key(x) for x in e)))


def canonical_edges(family) -> list:
    return sorted(family, key=_edge_key)


def ordering_sign(ordering, family=None) -> int:
    """Sign of an explicit edge ordering relative to the canonical one."""
    canon = canonical_edges(family if family is not None else ordering)
    pos = {e: i for i, e in enumerate(canon)}
    if len(ordering) != len(canon) or set(ordering) != set(canon):
        raise ArgumentError("ordering does not list each edge exactly once")
    return permutation_sign([pos[e] for e in ordering])


def _children(vertex: frozenset, family) -> list:
    """Maximal members of ``family`` strictly inside ``vertex`` plus uncovered leaves."""
    inside = [f for f in family if f < vertex]
    maximal = [f for f in inside if not any(f < g for g in inside)]
    covered = set().union(*maximal) if maximal else set()
    leaves = [frozenset([x]) for x in vertex if x not in covered]
    return sorted(maximal + leaves, key=_edge_key)


def _is_laminar(family) -> bool:
    fam = list(family)
    for a, b in combinations(fam, 2):
        if a & b and not (a <= b or b <= a):
            return False
    return True


@dataclass(frozen=True)
class Tree:
    leaves: frozenset
    family: frozenset = frozenset()

    def __post_init__(self):
        leaves = frozenset(self.leaves)
        family = frozenset(frozenset(f) for f in self.family)
        if not leaves:
            raise ArgumentError("a tree needs at least one leaf")
        for f in family:
            if not (f < leaves and len(f) >= 2):
                raise ArgumentError(f"internal vertex {set(f)} must be a proper subset of size >= 2")
        if len(leaves) == 1 and family:
            raise ArgumentError("the degenerate tree has no internal edges")
        if not _is_laminar(family):
            raise ArgumentError("vertex leaf sets must be nested or disjoint")
        object.__setattr__(self, "leaves", leaves)
        object.__setattr__(self, "family", family)

    @classmethod
    def star(cls, leaves) -> Tree:
        return cls(frozenset(leaves))

    @classmethod
    def degenerate(cls, label) -> Tree:
        return cls(frozenset([label]))

    @property
    def arity(self) -> int:
        return len(self.leaves)

    @property
    def k(self) -> int:
        return len(self.family)

    @property
    def is_degenerate(self) -> bool:
        return len(self.leaves) == 1

    @property
    def degree(self) -> int:
        return 2 - self.arity + self.k

    def edges(self) -> list:
        return canonical_edges(self.family)

    def vertices(self) -> list:
        """Leaf sets of all internal vertices, the top vertex first."""
        if self.is_degenerate:
            return []
        return [self.leaves] + self.edges()

    def children(self, vertex) -> list:
        return _children(frozenset(vertex), self.family)

    def to_json(self):
        """Sorted nested-set form: a leaf is its label, a vertex the list of its children."""
        def rec(v):
            if len(v) == 1:
                return next(iter(v))
            return [rec(c) for c in _children(v, self.family)]
        return rec(self.leaves)


@dataclass(frozen=True)
class Bush:
    """A bush; ``marked`` (optional) is the leaf set of one marked root child."""

    leaves: frozenset
    family: frozenset = frozenset()
    marked: frozenset | None = None

    def __post_init__(self):
        leaves = frozenset(self.leaves)
        family = frozenset(frozenset(f) for f in self.family)
        for f in family:
            if not (f <= leaves and len(f) >= 2):
                raise ArgumentError(f"vertex {set(f)} must be a subset of size >= 2")
        if not _is_laminar(family):
            raise ArgumentError("vertex leaf sets must be nested or disjoint")
        object.__setattr__(self, "leaves", leaves)
        object.__setattr__(self, "family", family)
        if self.marked is not None:
            m = frozenset(self.marked)
            if m not in self.root_children():
                raise ArgumentError(f"marked {set(m)} is not a root child")
            object.__setattr__(self, "marked", m)

    @property
    def arity(self) -> int:
        return len(self.leaves)

    @property
    def k(self) -> int:
        return len(self.family)

    @property
    def degree(self) -> int:
        return self.k - self.arity

    @property
    def is_marked(self) -> bool:
        return self.marked is not None

    def edges(self) -> list:
        return canonical_edges(self.family)

    def root_children(self) -> list:
        maximal = [f for f in self.family if not any(f < g for g in self.family)]
        covered = set().union(*maximal) if maximal else set()
        return sorted(maximal + [frozenset([x]) for x in self.leaves if x not in covered],
                      key=_edge_key)

    def children(self, vertex) -> list:
        return _children(frozenset(vertex), self.family)

    def to_json(self):
        def rec(v):
            if len(v) == 1:
                out = next(iter(v))
            else:
                out = [rec(c) for c in _children(v, self.family)]
            return {"marked": out} if v == self.marked else out
        return [rec(c) for c in self.root_children()]


# -- chains ------------------------------------------------------------------

def chain_add(acc: dict, key, value) -> None:
    v = acc.get(key, 0) + value
    if v:
        acc[key] = v
    else:
        acc.pop(key, None)


def oriented(structure, ordering=None, coeff=1) -> dict:
    """Chain with one term, given an explicit edge ordering."""
    s = 1 if ordering is None else ordering_sign(list(ordering), structure.family)
    return {structure: Fraction(coeff) * s}


def _split_terms(structure):
    """``(new_structure, sign)`` for every single edge splitting, new edge first."""
    fam = structure.family
    old = canonical_edges(fam)
    is_bush = isinstance(structure, Bush)
    vertices = [] if not is_bush and structure.is_degenerate else [structure.leaves] + old
    if is_bush:
        vertices = [None] + old
    for v in vertices:
        if v is None:
            kids = structure.root_children()
            top = len(kids)
        else:
            kids = _children(v, fam)
            top = len(kids) - 1
        for size in range(2, top + 1):
            for group in combinations(kids, size):
                new = frozenset().union(*group)
                family = fam | {new}
                sign = ordering_sign([new] + old, family)
                if is_bush:
                    marked = structure.marked
                    if marked is not None and v is None and marked in group:
                        marked = new
                    yield Bush(structure.leaves, family, marked), sign
                else:
                    yield Tree(structure.leaves, family), sign


def differential(chain: dict) -> dict:
    """Sum of all splittings of one vertex into two, for trees, bushes or marked bushes."""
    out = {}
    for s, c in chain.items():
        for t, sign in _split_terms(s):
            chain_add(out, t, c * sign)
    return out


tree_differential = differential
bush_differential = differential


# -- enumeration -------------------------------------------------------------

def _by_level(start, top: int) -> list:
    levels = [[start]]
    for _ in range(top):
        nxt = {}
        for s in levels[-1]:
            for t, _sign in _split_terms(s):
                nxt[t] = None
        if not nxt:
            break
        levels.append(sorted(nxt, key=_structure_key))
    return levels


def _structure_key(s):
    key = (len(s.family), tuple(_edge_key(e) for e in canonical_edges(s.family)))
    if isinstance(s, Bush) and s.marked is not None:
        key += (_edge_key(s.marked),)
    return key


def enumerate_trees(leaves, k: int) -> list:
    leaves = frozenset(leaves)
    if len(leaves) < 2 or k < 0 or k > len(leaves) - 2:
        return []
    levels = _by_level(Tree(leaves), k)
    return levels[k] if k < len(levels) else []


def enumerate_bushes(leaves, k: int, marked: bool = False) -> list:
    leaves = frozenset(leaves)
    if k < 0 or not leaves:
        return []
    levels = _by_level(Bush(leaves), k)
    if k >= len(levels):
        return []
    bushes = levels[k]
    if not marked:
        return bushes
    out = [Bush(b.leaves, b.family, m) for b in bushes for m in b.root_children()]
    return sorted(out, key=_structure_key)


# -- composition -------------------------------------------------------------

def _graft(family, leaves, s, inner_leaves, inner_family):
    if s not in leaves:
        raise ArgumentError(f"{s!r} is not an input")
    rest = leaves - {s}
    if rest & inner_leaves:
        raise ArgumentError("leaf sets overlap after grafting")
    new_leaves = rest | inner_leaves

    def lift(f):
        return (f - {s}) | inner_leaves if s in f else f

    outer = [lift(f) for f in canonical_edges(family)]
    inner = canonical_edges(inner_family)
    if len(inner_leaves) == 1:
        middle = []
    else:
        middle = [frozenset(inner_leaves)]
    order = outer + middle + inner
    return new_leaves, order


def compose_trees(t1: Tree, s, t2: Tree) -> dict:
    """``t1 o_s t2``: graft the root of t2 onto input s of t1.

    Returned as a one-term chain; its edges are ordered (edges of t1, the
    new edge, edges of t2).
    """
    if t1.is_degenerate:
        if s not in t1.leaves:
            raise ArgumentError(f"{s!r} is not an input of t1")
        return {t2: Fraction(1)}
    new_leaves, order = _graft(t1.family, t1.leaves, s, t2.leaves, t2.family)
    t = Tree(new_leaves, frozenset(order))
    return {t: Fraction(ordering_sign(order, t.family))}


def module_action(t: Tree, s, b: Bush) -> dict:
    """Insert tree ``t`` at input ``s`` of bush ``b``; edges ordered (b, new, t)."""
    new_leaves, order = _graft(b.family, b.leaves, s, t.leaves, t.family)
    marked = b.marked
    if marked is not None and s in marked:
        marked = (marked - {s}) | t.leaves
    bush = Bush(new_leaves, frozenset(order), marked)
    return {bush: Fraction(ordering_sign(order, bush.family))}


def compose_chains(op, left: dict, s, right: dict) -> dict:
    out = {}
    for a, ca in left.items():
        for b, cb in right.items():
            for t, c in op(a, s, b).items():
                chain_add(out, t, ca * cb * c)
    return out


# -- symmetric group ---------------------------------------------------------

def relabel(chain: dict, mapping: dict, twist: int = 0) -> dict:
    """Rename leaves by a bijection; ``twist`` multiplies by ``sign(mapping)**twist``.

    Edge orientations are carried along, so twist 0 is the plain action on
    the tree complex. An odd twist tensors with the sign representation.
    """
    dom = sorted(mapping, key=_label_key)
    cod = sorted(mapping.values(), key=_label_key)
    if len(set(cod)) != len(dom):
        raise ArgumentError("relabeling must be a bijection")
    tw = permutation_sign([cod.index(mapping[x]) for x in dom]) if twist % 2 else 1
    out = {}
    for s, c in chain.items():
        image = [frozenset(mapping[x] for x in e) for e in canonical_edges(s.family)]
        leaves = frozenset(mapping[x] for x in s.leaves)
        if isinstance(s, Tree):
            t = Tree(leaves, frozenset(image))
        else:
            m = None if s.marked is None else frozenset(mapping[x] for x in s.marked)
            t = Bush(leaves, frozenset(image), m)
        chain_add(out, t, c * ordering_sign(image, t.family) * tw)
    return out


def shifted_degree(t: Tree, n: int) -> int:
    """Degree of ``t`` in ``L(s)[(n - 1)(s - 1)]``, the operad acting on n-algebras' brackets."""
    return t.degree - (n - 1) * (t.arity - 1)


# -- complexes ---------------------------------------------------------------

def differential_matrix(source: list, target: list) -> SparseMatrix:
    index = {t: i for i, t in enumerate(target)}
    cols = []
    for s in source:
        col = {}
        for t, c in differential({s: Fraction(1)}).items():
            if t not in index:
                raise ArgumentError("differential leaves the target basis")
            col[index[t]] = c
        cols.append(col)
    return SparseMatrix.from_columns(len(target), cols)


def tree_complex(arity: int) -> list:
    """Bases ``T_0, T_1, ..`` of L(arity) on leaves ``1..arity``."""
    leaves = frozenset(range(1, arity + 1))
    return _by_level(Tree(leaves), max(arity - 2, 0))


def bush_complex(arity: int, marked: bool = False) -> list:
    leaves = frozenset(range(1, arity + 1))
    return [enumerate_bushes(leaves, k, marked) for k in range(arity)]


def check_d2(levels: list) -> bool:
    for lvl in levels:
        for s in lvl:
            if differential(differential({s: Fraction(1)})):
                return False
    return True


def complex_homology(levels: list) -> dict:
    """``{k: rank H_k}`` for a complex whose differential raises k by one."""
    ranks = []
    for k in range(len(levels) - 1):
        ranks.append(differential_matrix(levels[k], levels[k + 1]).rank())
    out = {}
    for k, basis in enumerate(levels):
        r_out = ranks[k] if k < len(ranks) else 0
        r_in = ranks[k - 1] if k >= 1 else 0
        out[k] = len(basis) - r_out - r_in
    return out
