"""Exact linear algebra over the supported Euclidean domains."""

from .matrices import (
    HermiteForm,
    Matrix,
    SmithForm,
    determinant,
    hermite_form,
    hstack,
    is_invertible,
    kernel_basis,
    kronecker,
    matrices_equal,
    smith_form,
    solve_linear,
    solve_matrix,
    vstack,
)
from .rings import (
    Ideal,
    IntegerRing,
    PrimeFieldPolynomialRing,
    Ring,
    RingElement,
    RingError,
    integer_ring,
    polynomial_ring,
)

__all__ = [
    "HermiteForm",
    "Matrix",
    "SmithForm",
    "determinant",
    "hermite_form",
    "hstack",
    "is_invertible",
    "kernel_basis",
    "kronecker",
    "matrices_equal",
    "smith_form",
    "solve_linear",
    "solve_matrix",
    "vstack",
    "Ideal",
    "IntegerRing",
    "PrimeFieldPolynomialRing",
    "Ring",
    "RingElement",
    "RingError",
    "integer_ring",
    "polynomial_ring",
]
