"""Exact face combinatorics for convex hulls of highest weight modules.

Everything is computed over the rationals (:class:`fractions.Fraction` and
Python ints); no floating point is used anywhere in the package.
"""

from weylfaces.cartan import CartanData, components, is_finite_type, validate_gcm
from weylfaces.errors import (
    CapExceeded,
    GcmViolation,
    NotApplicable,
    NotDominant,
    NotSymmetrizable,
    RankTooLarge,
    RegularityRequired,
    TooLarge,
    Unclosed,
    WeylFacesError,
)
from weylfaces.extpoly import INF, ExtPolynomial
from weylfaces.faces import FaceDescriptor, ModuleDescriptor, TorusValue
from weylfaces.weyl import Weight

__all__ = [
    "CapExceeded",
    "CartanData",
    "ExtPolynomial",
    "FaceDescriptor",
    "GcmViolation",
    "INF",
    "ModuleDescriptor",
    "NotApplicable",
    "NotDominant",
    "NotSymmetrizable",
    "RankTooLarge",
    "RegularityRequired",
    "TooLarge",
    "TorusValue",
    "Unclosed",
    "Weight",
    "WeylFacesError",
    "components",
    "is_finite_type",
    "validate_gcm",
]
