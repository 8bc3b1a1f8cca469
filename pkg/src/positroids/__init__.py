"""Exact-arithmetic combinatorics of positroids, plabic graphs and the twist.

The usual entry points:

>>> from positroids import fixtures
>>> from positroids.matchings import enumerate_matchings
>>> g = fixtures.load("square4")
>>> len(enumerate_matchings(g))
7
"""

from .core import (
    BoundedAffinePermutation,
    GrassmannNecklace,
    Positroid,
    gale_min,
    length,
    necklace_from_bases,
    necklace_from_perm,
    perm_from_necklace,
    pi_implies,
    positroid_from_necklace,
)
from .errors import PreconditionError
from .linalg import (
    PlueckerVector,
    RationalMatrix,
    double_twist_mu,
    matrix_necklace,
    minor,
    pluecker,
    rank,
    twist,
)
from .plabic import GraphError, PlabicGraph

__version__ = "0.1.0"

__all__ = [
    "BoundedAffinePermutation",
    "GrassmannNecklace",
    "GraphError",
    "PlabicGraph",
    "PlueckerVector",
    "Positroid",
    "PreconditionError",
    "RationalMatrix",
    "double_twist_mu",
    "gale_min",
    "length",
    "matrix_necklace",
    "minor",
    "necklace_from_bases",
    "necklace_from_perm",
    "perm_from_necklace",
    "pi_implies",
    "pluecker",
    "positroid_from_necklace",
    "rank",
    "twist",
]
