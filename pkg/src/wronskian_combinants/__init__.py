"""Exact transvectants, Wronskians and Wronskian combinants of binary forms."""

from .binform import (BiForm, BinaryForm, Mat2, add, from_binomial, multiply,
                      partial_derivative, polarize, sl2_substitute, to_binomial)
from .combinant import (BasisExpression, CombinantVector, KeypropReport, LinearMap,
                        express_in_basis, extract_components, gamma, index_set, kernel,
                        psi_apply, psi_matrix, recover_subspace, slot_order,
                        verify_keyprop, wronskian_combinants)
from .errors import IdentityViolation, NotInImageError, NotInSpanError
from .grassmann import (Membership, ProjectivePoint, Subspace, canonicalize,
                        equal_points, image_membership, pluecker_point)
from .serialize import parse_form
from .transvect import transvectant
from .wronskian import is_dependent, wronskian

__version__ = "0.1.0"

__all__ = [
    "BiForm", "BinaryForm", "Mat2", "add", "from_binomial", "multiply",
    "partial_derivative", "polarize", "sl2_substitute", "to_binomial",
    "BasisExpression", "CombinantVector", "KeypropReport", "LinearMap",
    "express_in_basis", "extract_components", "gamma", "index_set", "kernel",
    "psi_apply", "psi_matrix", "recover_subspace", "slot_order",
    "verify_keyprop", "wronskian_combinants",
    "IdentityViolation", "NotInImageError", "NotInSpanError",
    "Membership", "ProjectivePoint", "Subspace", "canonicalize",
    "equal_points", "image_membership", "pluecker_point",
    "parse_form", "transvectant", "is_dependent", "wronskian",
]
