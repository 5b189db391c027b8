"""
Trees with labelled leaves form a chain complex: the differential splits
one vertex into two along a new edge. Its homology sits in the top degree
(binary trees) with dimension (s - 1)!, the arity-s part of the Lie operad.

Run:  python3 demos/tree_complexes.py
"""

from math import factorial

from weylalg.operad import (Tree, check_d2, complex_homology, compose_trees, differential,
                            tree_complex)

star = Tree.star({1, 2, 3})
print("d(star on 3 leaves):")
for t, c in sorted(differential({star: 1}).items(), key=lambda tc: str(tc[0].to_json())):
    print(f"  {c:+}  {t.to_json()}")

print("\narity  trees by number of edges        d^2 = 0  homology")
for s in range(2, 7):
    levels = tree_complex(s)
    counts = [len(lvl) for lvl in levels]
    h = complex_homology(levels) if s <= 5 else None
    shown = h if h is not None else "(skipped)"
    print(f"{s:>5}  {str(counts):<30} {str(check_d2(levels)):<8} {shown}")
    if h is not None:
        assert h[s - 2] == factorial(s - 1)

# Grafting one tree onto a leaf of another adds an edge between them.
(t, sign), = compose_trees(Tree.star({1, 2}), 2, Tree.star({3, 4})).items()
print(f"\nstar{{1,2}} o_2 star{{3,4}} = {int(sign):+d} {t.to_json()}")
