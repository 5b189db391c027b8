import random
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from weylalg.element import Element
from weylalg.graded import GradedSpace, odd_space, standard_symplectic
from weylalg.hseries import HSeries
from weylalg.lie import LieAlgebra


def moyal(pairs=1):
    return standard_symplectic(pairs, n=1)


def super_moyal():
    """n = 1 with one even pair and an odd pair of degrees 1 and -1."""
    return GradedSpace.build(1, [("x", 0), ("p", 0), ("th", 1), ("eta", -1)],
                             [[0, 1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]])


def mixed3():
    """n = 3: an even pair in degrees 0 and 2 and two odd generators of degree 1."""
    return GradedSpace.build(3, [("a", 0), ("b", 2), ("u", 1), ("v", 1)],
                             [[0, 1, 0, 0], [-1, 0, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])


SPACES = {"moyal1": moyal(1), "moyal2": moyal(2), "super": super_moyal(),
          "odd3": odd_space(3), "mixed3": mixed3()}


def random_monomial(rng, space, max_degree):
    m = [0] * space.dim
    for _ in range(rng.randint(0, max_degree)):
        i = rng.randrange(space.dim)
        if space.parities[i] and m[i]:
            continue
        m[i] += 1
    return tuple(m)


def random_element(rng, space, max_degree=4, terms=3, h_max=1):
    out = {}
    for _ in range(rng.randint(1, terms)):
        m = random_monomial(rng, space, max_degree)
        e = rng.randint(0, h_max)
        out[m] = out.get(m, {})
        out[m][e] = out[m].get(e, 0) + Fraction(rng.randint(-5, 5), rng.randint(1, 3))
    return Element(space, {m: HSeries(c) for m, c in out.items()})


def random_homogeneous(rng, space, max_degree=3, terms=3):
    """Sum of monomials sharing one cohomological degree."""
    seed = random_monomial(rng, space, max_degree)
    deg = space.degree_of(seed)
    out = {seed: Fraction(rng.randint(1, 4))}
    for _ in range(terms * 4):
        if len(out) >= terms:
            break
        m = random_monomial(rng, space, max_degree)
        if space.degree_of(m) == deg:
            out[m] = out.get(m, 0) + Fraction(rng.randint(-4, 4), rng.randint(1, 2))
    e = Element(space, out)
    return e if e else Element(space, {seed: 1})


seeds = st.integers(min_value=0, max_value=2**32 - 1)


@pytest.fixture
def rng():
    return random.Random(20261015)


def corrupted_lie():
    """Structure constants ``e012 + e034`` on k^5: totally antisymmetric, but Jacobi fails."""
    br = {(0, 1): {2: 1}, (1, 2): {0: 1}, (2, 0): {1: 1},
          (0, 3): {4: 1}, (3, 4): {0: 1}, (4, 0): {3: 1}}
    return LieAlgebra(5, br, metric=[[int(i == j) for j in range(5)] for i in range(5)], name="broken")


# -- acceptance reporting --------------------------------------------------------

ACCEPTANCE = {}


@pytest.fixture
def acceptance():
    """Record one pass/fail line per criterion; printed at the end of the run."""
    def record(number, ok, detail):
        line = f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {detail}"
        ACCEPTANCE[number] = line
        print(line)
        return ok
    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for n in sorted(ACCEPTANCE):
            terminalreporter.write_line(ACCEPTANCE[n])
