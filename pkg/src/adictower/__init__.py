"""Exact verification of ideal-power tower constructions over Euclidean
domains.

The package builds the tower of quotients by powers of a principal ideal,
reconstructs its transition maps from hom modules, forms truncated inverse
limits and machine-checks the chain of statements ending in the
weak-epimorphism certificate and the self-smallness witness.
"""

__version__ = "0.1.0"

from .exactalg.rings import RingError, integer_ring, polynomial_ring
from .towers import build_adic_tower, truncated_limit

__all__ = [
    "RingError",
    "__version__",
    "build_adic_tower",
    "integer_ring",
    "polynomial_ring",
    "truncated_limit",
]
