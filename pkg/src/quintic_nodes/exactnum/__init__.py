"""Exact arithmetic over Q and small number fields."""
from fractions import Fraction as Rational

from .factor import Factorization, is_irreducible, poly_factor, rational_roots, split_quartic
from .matrix import ExactMatrix, cofactor_det, det_exact, nullspace
from .numberfield import QQ, FieldElement, FieldError, NumberField, common_field
from .poly import (
    Poly,
    interpolate,
    poly_gcd,
    poly_gcd_many,
    poly_resultant,
    squarefree_decomposition,
)


def nf_inv(x: FieldElement) -> FieldElement:
    """Multiplicative inverse in the element's number field."""
    if not isinstance(x, FieldElement):
        x = QQ(x)
    return x.inverse()


__all__ = [
    "Rational", "Poly", "NumberField", "FieldElement", "FieldError", "QQ", "ExactMatrix",
    "Factorization", "poly_factor", "poly_resultant", "poly_gcd", "poly_gcd_many",
    "rational_roots", "split_quartic", "is_irreducible", "squarefree_decomposition",
    "interpolate", "det_exact", "cofactor_det", "nullspace", "nf_inv", "common_field",
]
