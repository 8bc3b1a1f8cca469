"""Graph surgery: urban renewal, bridges, lollipops, and building a reduced
graph for any bounded affine permutation.

Run with:  PYTHONPATH=src python3 demos/04_moves_bridges_synthesis.py
"""
import random

from positroids import fixtures
from positroids.core import BoundedAffinePermutation, length
from positroids.measurement import measure, random_weighting
from positroids.moves import add_bridge, synthesize, urban_renewal

g = fixtures.load("square4")
rng = random.Random(3)
z = random_weighting(g, rng)
res = urban_renewal(g, "f1", z)
print("urban renewal at the square face:")
print("  gauge note:", {k: str(v) for k, v in res.note.items()})
print("  measure preserved exactly:", measure(res.graph, res.weights) == measure(g, z))

s36 = fixtures.load("schubert36")
res = add_bridge(s36, 6, "right")
print("\nright bridge on schubert36 between 6 and 1:")
print("  new trip permutation:", res.graph.trip_permutation().values)
print("  faces", len(s36.faces()), "->", len(res.graph.faces()))

print("\nsynthesis from a permutation alone:")
for values in [(3, 4, 5, 6), (3, 5, 6, 7, 8, 10), (2, 5, 4, 6, 8)]:
    pi = BoundedAffinePermutation(values)
    built = synthesize(pi)
    ok, _ = built.is_reduced()
    print(
        f"  pi={values}: reduced={ok}, |F|={len(built.faces())}"
        f" = k(n-k) - l + 1 = {pi.k * (pi.n - pi.k) - length(pi) + 1}"
    )
