"""A first tour: build a plabic graph, look at its faces, strands and matchings.

Run with:  PYTHONPATH=src python3 demos/01_graphs_and_matchings.py
"""
from positroids import fixtures
from positroids.matchings import enumerate_matchings, graph_positroid, matching_boundary

g = fixtures.load("square4")
print(f"square4: n={g.n}, k={g.k}, {len(g.colors)} internal vertices, {len(g.edges)} edges")

print("\nFaces (Euler: |F| + |V| = |E| + 1):")
for f in g.faces():
    print(f"  {f.id:>3} {f.kind:<9} edges {list(f.edges)}")

print("\nStrands and the trip permutation:")
for s in g.strands():
    print(f"  {s.source} -> {s.target} via {[e for e, _ in s.path]}")
print("  trip permutation:", g.trip_permutation().values)

print("\nAll matchings, with their boundaries:")
for m in enumerate_matchings(g):
    print(f"  {sorted(m)}  boundary {matching_boundary(g, m)}")

pos = graph_positroid(g)
print(f"\nThe boundaries form a positroid with {len(pos.bases)} bases:")
print(" ", sorted(pos.bases))

print("\nThe bigger running example:")
s36 = fixtures.load("schubert36")
print(f"schubert36: n={s36.n}, k={s36.k}, trip permutation {s36.trip_permutation().values}")
print("source labels:", {f: "".join(map(str, l)) for f, l in s36.face_labels("source").items()})
print("target labels:", {f: "".join(map(str, l)) for f, l in s36.face_labels("target").items()})
