"""Exact algebra for Weyl n-algebras, L-infinity tree complexes, Chevalley-Eilenberg
homology, Koszul models of factorization homology and trivalent graph weights."""

__version__ = "0.1.0"

from .element import Element, multiply, apply_domega, parse_element
from .errors import (ArgumentError, MaurerCartanError, StateError,
                     UnsupportedArityError, WeylError)
from .graded import GradedSpace, check_space, koszul_sign, odd_space, standard_symplectic
from .hseries import HSeries
from .lie import LieAlgebra, MetricLie, check_lie, check_metric_invariance, load_lie
from .weyl import (WeylAlgebra, build_mc_element, filtration_degree, ge3_project,
                   quantum_ce_differential)

__all__ = [
    "ArgumentError", "Element", "GradedSpace", "HSeries", "LieAlgebra", "MaurerCartanError",
    "MetricLie", "StateError", "UnsupportedArityError", "WeylAlgebra", "WeylError",
    "apply_domega", "build_mc_element", "check_lie", "check_metric_invariance",
    "check_space", "filtration_degree", "ge3_project", "koszul_sign", "load_lie",
    "multiply", "odd_space", "parse_element", "quantum_ce_differential",
    "standard_symplectic",
]
