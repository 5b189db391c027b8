import itertools
import random
from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from weylalg.errors import ArgumentError
from weylalg.operad import (Bush, Tree, bush_complex, chain_add, check_d2, complex_homology,
                            compose_chains, compose_trees, differential, enumerate_bushes,
                            enumerate_trees, module_action, ordering_sign, oriented, relabel,
                            shifted_degree, tree_complex)

from conftest import seeds


def _laminar(family):
    return all(not (a & b) or a <= b or b <= a for a, b in itertools.combinations(family, 2))


def brute_families(s, k, proper):
    """All laminar k-element families of subsets of {1..s} of size >= 2."""
    leaves = range(1, s + 1)
    top = s - 1 if proper else s
    subsets = [frozenset(c) for r in range(2, top + 1) for c in itertools.combinations(leaves, r)]
    return {frozenset(f) for f in itertools.combinations(subsets, k) if _laminar(f)}


def _chain(x):
    return {x: Fraction(1)}


def _sub(a, b):
    out = dict(a)
    for k, v in b.items():
        chain_add(out, k, -v)
    return out


def _scale(a, c):
    return {k: v * c for k, v in a.items()}


def _add(a, b):
    return _sub(a, _scale(b, -1))


# -- enumeration ----------------------------------------------------------------

def test_tree_count_examples():
    S3 = {1, 2, 3}
    assert len(enumerate_trees(S3, 0)) == 1
    assert enumerate_trees(S3, 0)[0] == Tree.star(S3)
    assert len(enumerate_trees(S3, 1)) == 3
    assert len(enumerate_trees(range(1, 6), 3)) == 105
    assert enumerate_trees(S3, 2) == [] and enumerate_trees(S3, -1) == []


@pytest.mark.parametrize("s", [2, 3, 4, 5])
def test_tree_enumeration_matches_brute_force(s):
    for k in range(s - 1):
        found = {t.family for t in enumerate_trees(range(1, s + 1), k)}
        assert found == brute_families(s, k, proper=True)


@pytest.mark.parametrize("s", [1, 2, 3, 4])
def test_bush_enumeration_matches_brute_force(s):
    for k in range(s):
        found = {b.family for b in enumerate_bushes(range(1, s + 1), k)}
        assert found == brute_families(s, k, proper=False)


def test_total_tree_counts():
    # total numbers of rooted trees with labelled leaves and no unary vertices
    for s, total in [(2, 1), (3, 4), (4, 26), (5, 236)]:
        assert sum(len(lvl) for lvl in tree_complex(s)) == total


def test_binary_counts_double_factorial():
    for s in range(2, 7):
        expected = 1
        for j in range(1, 2 * s - 2, 2):
            expected *= j
        assert len(tree_complex(s)[-1]) == expected


def test_single_leaf_bush():
    assert enumerate_bushes({1}, 0) == [Bush(frozenset({1}))]
    assert enumerate_bushes({1}, 1) == []


def test_tree_validation():
    with pytest.raises(ArgumentError):
        Tree(frozenset({1, 2, 3}), frozenset({frozenset({1, 2}), frozenset({2, 3})}))
    with pytest.raises(ArgumentError):
        Tree(frozenset({1, 2}), frozenset({frozenset({1, 2})}))
    with pytest.raises(ArgumentError):
        Bush(frozenset({1, 2, 3}), frozenset({frozenset({1, 2})}), frozenset({1}))


# -- differential ----------------------------------------------------------------------

def test_star_differential():
    d = differential(_chain(Tree.star({1, 2, 3})))
    assert set(d) == set(enumerate_trees({1, 2, 3}, 1))
    assert all(abs(v) == 1 for v in d.values())


def test_d_squared_on_star4_and_binary():
    assert differential(differential(_chain(Tree.star({1, 2, 3, 4})))) == {}
    for t in tree_complex(4)[-1]:
        assert differential(_chain(t)) == {}


@pytest.mark.parametrize("s", [2, 3, 4, 5, 6])
def test_tree_d_squared(s):
    assert check_d2(tree_complex(s))


@pytest.mark.parametrize("s", [1, 2, 3, 4, 5])
@pytest.mark.parametrize("marked", [False, True])
def test_bush_d_squared(s, marked):
    assert check_d2(bush_complex(s, marked))


def test_marked_differential_keeps_one_marking():
    for s in range(1, 5):
        for lvl in bush_complex(s, marked=True):
            for b in lvl:
                for c in differential(_chain(b)):
                    assert c.marked is not None and c.marked in c.root_children()


@pytest.mark.parametrize("s", [2, 3, 4, 5])
def test_tree_homology_concentrated_in_top_degree(s):
    h = complex_homology(tree_complex(s))
    top = s - 2
    assert h[top] == factorial(s - 1)
    assert all(r == 0 for k, r in h.items() if k != top)


def test_orientation_sign():
    t = enumerate_trees(range(1, 5), 2)[0]
    e1, e2 = t.edges()
    assert oriented(t, [e2, e1]) == {t: -1}
    assert ordering_sign([e1, e2], t.family) == 1


def test_shifted_degree():
    t = Tree.star({1, 2, 3})
    assert t.degree == -1
    assert shifted_degree(t, 1) == -1
    assert shifted_degree(t, 3) == -5


# -- composition -------------------------------------------------------------------

def test_compose_examples():
    out = compose_trees(Tree.star({1, 2}), 2, Tree.star({3, 4}))
    (t, c), = out.items()
    assert t.arity == 3 and t.k == 1 and abs(c) == 1
    t3 = enumerate_trees({1, 2, 3}, 1)[1]
    assert compose_trees(Tree.degenerate(9), 9, t3) == {t3: 1}
    assert compose_trees(t3, 2, Tree.degenerate(2)) == {t3: 1}
    with pytest.raises(ArgumentError):
        compose_trees(t3, 7, Tree.star({8, 9}))


def _random_tree(rng, labels):
    labels = list(labels)
    if len(labels) == 1:
        return Tree.degenerate(labels[0])
    lvls = tree_complex(len(labels))
    t = rng.choice(rng.choice(lvls))
    mapping = dict(zip(range(1, len(labels) + 1), labels))
    (tt, _), = relabel(_chain(t), mapping).items()
    return tt


@settings(max_examples=60, deadline=None)
@given(seeds)
def test_composition_associative(seed):
    rng = random.Random(seed)
    t1 = _random_tree(rng, [1, 2, 3])
    t2 = _random_tree(rng, [10, 11, 12][:rng.randint(1, 3)])
    t3 = _random_tree(rng, [20, 21][:rng.randint(1, 2)])
    s = rng.choice(sorted(t1.leaves))
    s2 = rng.choice(sorted(t2.leaves))
    left = compose_chains(compose_trees, compose_trees(t1, s, t2), s2, _chain(t3))
    right = compose_chains(compose_trees, _chain(t1), s, compose_trees(t2, s2, t3))
    assert left == right


def _small_trees(labels):
    if len(labels) == 1:
        return [Tree.degenerate(labels[0])]
    mapping = dict(zip(range(1, len(labels) + 1), labels))
    out = []
    for lvl in tree_complex(len(labels)):
        for t in lvl:
            (tt, _), = relabel(_chain(t), mapping).items()
            out.append(tt)
    return out


def test_composition_leibniz_exhaustive():
    # d(t1 o t2) = dt1 o t2 + (-1)^(k1 + 1) t1 o dt2
    for n1 in (1, 2, 3):
        for n2 in (1, 2, 3):
            for t1 in _small_trees(list(range(1, n1 + 1))):
                for t2 in _small_trees(list(range(10, 10 + n2))):
                    if t1.is_degenerate and t2.is_degenerate:
                        continue
                    for s in t1.leaves:
                        lhs = differential(compose_trees(t1, s, t2))
                        a = compose_chains(compose_trees, differential(_chain(t1)), s, _chain(t2))
                        b = compose_chains(compose_trees, _chain(t1), s, differential(_chain(t2)))
                        rhs = _add(a, _scale(b, (-1) ** (t1.k + 1)))
                        if t1.is_degenerate:
                            rhs = differential(_chain(t2))
                        assert lhs == rhs


def test_module_action_examples():
    b = Bush(frozenset({1}))
    (out, c), = module_action(Tree.star({1, 2}), 1, b).items()
    assert out == Bush(frozenset({1, 2}), frozenset({frozenset({1, 2})})) and c == 1
    for bb in enumerate_bushes({1, 2, 3}, 1, marked=True):
        assert module_action(Tree.degenerate(2), 2, bb) == {bb: 1}


def _small_bushes(labels, marked):
    out = []
    for k in range(len(labels)):
        out.extend(enumerate_bushes(labels, k, marked))
    return out


@pytest.mark.parametrize("marked", [False, True])
def test_module_action_leibniz_exhaustive(marked):
    # d(b . t) = db . t + (-1)^(k_b + 1) b . dt, on all pairs with at most 4 leaves
    for nb in (1, 2, 3):
        for nt in (1, 2, 3):
            if nb + nt - 1 > 4:
                continue
            for b in _small_bushes(list(range(1, nb + 1)), marked):
                for t in _small_trees(list(range(10, 10 + nt))):
                    for s in b.leaves:
                        lhs = differential(module_action(t, s, b))
                        x = compose_chains(lambda bb, ss, tt: module_action(tt, ss, bb),
                                           differential(_chain(b)), s, _chain(t))
                        y = compose_chains(lambda bb, ss, tt: module_action(tt, ss, bb),
                                           _chain(b), s, differential(_chain(t)))
                        rhs = _add(x, _scale(y, (-1) ** (b.k + 1)))
                        assert lhs == rhs


# -- symmetric group ------------------------------------------------------------

@settings(max_examples=40, deadline=None)
@given(st.permutations([1, 2, 3, 4]), st.integers(0, 1))
def test_relabel_commutes_with_differential(perm, twist):
    mapping = dict(zip([1, 2, 3, 4], perm))
    for lvl in tree_complex(4)[:-1]:
        for t in lvl:
            c = _chain(t)
            assert relabel(differential(c), mapping, twist) == differential(relabel(c, mapping, twist))
