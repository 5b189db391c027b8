"""
Chevalley-Eilenberg homology of small Lie algebras, computed twice: once
from the usual coderivation formula and once by evaluating decorated
bushes. The two differentials agree entry for entry.

Run:  python3 demos/lie_homology.py
"""

from weylalg.ce import build_ce_complex, ce_via_bushes, homology
from weylalg.lie import abelian, heisenberg, sl2, so3

algebras = [abelian(3), heisenberg(), sl2(), so3()]

print(f"{'algebra':<12}{'coefficients':<14}{'ranks by weight':<22}bushes agree")
for g in algebras:
    for coeff in ("trivial", "adjoint"):
        direct = build_ce_complex(g, coeff, g.dim)
        bushes = ce_via_bushes(g, coeff, g.dim)
        agree = all(direct.matrices[w].rows == bushes.matrices[w].rows for w in direct.matrices)
        ranks = list(homology(direct).ranks.values())
        print(f"{g.name:<12}{coeff:<14}{str(ranks):<22}{agree}")

# Whitehead's lemmas: a semisimple algebra has no homology in weights 1 and 2,
# and the adjoint module has none at all.
