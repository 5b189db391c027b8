"""
The Moyal product on k[x, p][[h]] and the shifted Poisson bracket in n = 3.

Run:  python3 demos/moyal_product.py
"""

from weylalg.element import format_element
from weylalg.graded import odd_space, standard_symplectic
from weylalg.weyl import WeylAlgebra

# One canonical pair x, p with omega(x, p) = 1.
W = WeylAlgebra(standard_symplectic(1, n=1))
x, p = W.element("x1"), W.element("p1")

print("x * p      =", format_element(W.star(x, p)))
print("p * x      =", format_element(W.star(p, x)))
print("[x, p]     =", format_element(W.bracket(x, p)))

# Higher terms appear once both factors have enough derivatives to pair.
a, b = W.element("x1^2"), W.element("p1^2")
print("x^2 * p^2  =", format_element(W.star(a, b)))

# Associativity is exact, term by term.
c = W.element("x1 p1 + h")
lhs, rhs = W.star(W.star(a, b), c), W.star(a, W.star(b, c))
print("associative on (x^2, p^2, xp + h):", lhs == rhs)

# For n = 3 the product is commutative and the bracket is h times the
# Poisson bracket. On three odd generators with the identity pairing the
# bracket of two generators is h times their pairing.
W3 = WeylAlgebra(odd_space(3))
xi1, xi2 = W3.element("xi1"), W3.element("xi2")
print("{xi1, xi1} =", format_element(W3.bracket(xi1, xi1)))
print("{xi1, xi1 xi2} =", format_element(W3.bracket(xi1, W3.product(xi1, xi2))))
print("top element central on cubics and quartics:", W3.check_top_central(4) == [])
