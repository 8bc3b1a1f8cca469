"""Factoring a triangular matrix through the wiring-diagram graph.

Inverting the boundary measurement map of the graph of the word s2 s1 s2
recovers the elementary-matrix factorization of an upper triangular 3x3
matrix, with the classical quotient-of-products parameter formulas.

Run with:  PYTHONPATH=src python3 demos/05_chamber_ansatz.py
"""
from fractions import Fraction as Q

from positroids.chamber import factorization_identity, factorization_parameters
from positroids.linalg import RationalMatrix

a, b, c, d, e, f = Q(2), Q(3), Q(5), Q(7), Q(11), Q(13)
m = RationalMatrix.build([[a, b, c], [0, d, e], [0, 0, f]])
graph, ts, ds = factorization_parameters([2, 1, 2], m)

print("matrix:")
for row in m.rows:
    print("  ", [str(x) for x in row])
print("word s2 s1 s2, parameters from the inverse pipeline:")
print("  t =", [str(t) for t in ts])
print("  expected: (be-cd)/(bf), b/d, cd/(bf) =",
      [str((b * e - c * d) / (b * f)), str(b / d), str(c * d / (b * f))])
print("  diagonal =", [str(x) for x in ds])
print("identity E2(t1) E1(t2) E2(t3) D(a,d,f) == matrix:",
      factorization_identity([2, 1, 2], m))
