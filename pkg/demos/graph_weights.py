"""
Weights of trivalent graphs for metric Lie algebras: structure constants
on vertices, the inverse metric on edges. Reversing one vertex negates
the weight, and the IHX relation follows from Jacobi.

Run:  python3 demos/graph_weights.py
"""

from weylalg.graphs import CATALOGUE, graph_weight, ihx_check, load_graph, q_power_class
from weylalg.lie import abelian, sl2, so3
from weylalg.weyl import build_mc_element, lie_weyl_algebra

algebras = {"sl2": sl2(), "so3": so3(), "abelian3": abelian(3)}

print(f"{'graph':<10}" + "".join(f"{n:>10}" for n in algebras) + "   IHX on every edge")
for name in CATALOGUE:
    G = load_graph(name)
    weights = [graph_weight(G, g) for g in algebras.values()]
    ihx = all(ihx_check(g, G, e) for g in algebras.values() for e, (a, b) in enumerate(G.edges)
              if G.vertex_of(a) != G.vertex_of(b))
    print(f"{name:<10}" + "".join(f"{str(w):>10}" for w in weights) + f"   {ihx}")

theta = load_graph("theta")
print("\ntheta with one vertex reversed, sl2:", graph_weight(theta.flip(0), sl2()))

# The cubic element q = (1/6) c_ijk xi^i xi^j xi^k and its powers q^i / i!
# are cycles of the Chevalley-Eilenberg complex of the Weyl algebra.
g = sl2()
W = lie_weyl_algebra(g)
print("q =", build_mc_element(g, W))
for i in range(4):
    c = q_power_class(g, i, W)
    print(f"h^{c.h_exponent} q^{i}/{i}!: {len(c.chain)} terms, closed {c.closed}")
