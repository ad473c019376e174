"""Equidistant linear subspace codes in small projective spaces."""

from .gfq import FieldSpec, field_make
from .subspace import (Subspace, enumerate_grassmannian, gaussian_binomial,
                       intersect, orthogonal_complement,
                       projective_space_size, span, subspace_distance,
                       subspace_sum, zero_subspace)
from .lincode import (LinearCode, check_linearity_identities, code_make,
                      metrics, structure_analysis, verify_linear)
from .designs import STS, design_params, is_projective_plane, sts_boolean, \
    sts_make, verify_sts
from .construct import (IntersectingFamily, fano_code, grassmannian_family,
                        hyperplane_family, max_code_size_dim3,
                        max_code_size_distance2, ratio_report,
                        size_table_by_dimension, size_table_by_field_order,
                        sts_lift, sunflower, sunflower_code_binary,
                        trim_family)
from .search import (SearchResult, count_labeled_sts,
                     design_identity_solutions, max_intersecting_family,
                     ramanujan_nagell_solutions, verify_family_size_gap,
                     verify_fano_uniqueness, verify_halfspace)

__version__ = "0.1.0"

__all__ = [
    "FieldSpec", "field_make",
    "Subspace", "span", "subspace_sum", "intersect", "subspace_distance",
    "orthogonal_complement", "enumerate_grassmannian", "gaussian_binomial",
    "projective_space_size", "zero_subspace",
    "LinearCode", "code_make", "verify_linear", "metrics",
    "check_linearity_identities", "structure_analysis",
    "STS", "sts_make", "sts_boolean", "verify_sts", "design_params",
    "is_projective_plane",
    "IntersectingFamily", "fano_code", "sunflower", "sunflower_code_binary",
    "hyperplane_family", "grassmannian_family", "sts_lift", "trim_family",
    "max_code_size_dim3", "max_code_size_distance2",
    "size_table_by_field_order", "size_table_by_dimension", "ratio_report",
    "SearchResult", "max_intersecting_family", "verify_fano_uniqueness",
    "design_identity_solutions", "ramanujan_nagell_solutions",
    "verify_family_size_gap", "count_labeled_sts", "verify_halfspace",
]
