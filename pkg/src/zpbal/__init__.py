"""Exact computational toolkit for zero-product balanced and zero-product
determined finite-dimensional associative algebras.

All arithmetic is exact (arbitrary-precision rationals or prime-field
residues); every non-trivial verdict is backed by an independently
re-checkable certificate.
"""

from zpbal.fields import Rationals, PrimeField, field_from_name
from zpbal.algebra import Algebra, Element

__all__ = ["Rationals", "PrimeField", "field_from_name", "Algebra", "Element"]
