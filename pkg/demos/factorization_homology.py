"""
Factorization homology of a closed manifold with coefficients in a Weyl
algebra. The Koszul model on H_*(M) (x) V leaves exactly one class, in a
degree given by the Betti numbers of M and the degrees of V.

Run:  python3 demos/factorization_homology.py
"""

from weylalg.facthom import (ManifoldHomology, commutative_fact_hom, koszul_verify,
                             weyl_degree_formula)
from weylalg.graded import odd_space, standard_symplectic

S1, S3 = ManifoldHomology.sphere(1), ManifoldHomology.sphere(3)

# On the circle this is Hochschild homology of the Weyl algebra: one class,
# in homological degree dim V.
for m in (1, 2):
    V = standard_symplectic(m, n=1)
    r = koszul_verify(S1, V, 6)
    print(f"S^1, dim V = {V.dim}: ranks {r.ranks}, formula degree {weyl_degree_formula(S1, V)}")

for d in range(1, 6):
    V = odd_space(d)
    r = koszul_verify(S3, V, 6)
    print(f"S^3, V = {d} odd generators: total rank {r.total_rank} in degree {r.degree}")

# Rational Betti data cannot tell a lens space from the sphere.
lens = ManifoldHomology(3, (1, 0, 0, 1))
print("lens space, V = 3 odd generators:", koszul_verify(lens, odd_space(3), 6).ranks)

# Without the deformation the answer is the whole free algebra on H_*(M) (x) V.
V = standard_symplectic(1, n=1)
print("commutative, S^1:", commutative_fact_hom(S1, V, 3))
