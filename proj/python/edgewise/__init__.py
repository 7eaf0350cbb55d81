"""Edgewise subdivisions of simplicial complexes in exact arithmetic.

Thin Python layer over the C++ core: h-polynomials and local h-polynomials
of r-fold edgewise subdivisions, anchored Smirnov words with their hop
classes, gamma vectors, and exact real-root counting. Polynomials are lists
of Python ints by ascending degree; complexes are lists of facets.
"""

from edgewise._edgewise import (
    barycentric_subdivision,
    canonical_facets,
    cone,
    e_operator,
    enumerate_words,
    esd_complex,
    esd_h_polynomial,
    esd_simplex,
    evaluate,
    f_vector,
    gamma_expand,
    gamma_reconstruct,
    h_polynomial,
    h_via_words,
    hop_classes,
    interior_vertices,
    is_flag,
    is_palindromic,
    is_real_rooted,
    lift_interior_vertex,
    link,
    local_h,
    local_h_of,
    omega_vertices,
    poly_add,
    poly_mul,
    poly_sub,
    real_root_count,
    run_checks,
    savage_check,
    stellar_subdivide_edge,
    word_stats,
    xi_coefficients,
)

__all__ = [
    "barycentric_subdivision",
    "canonical_facets",
    "cone",
    "e_operator",
    "enumerate_words",
    "esd_complex",
    "esd_h_polynomial",
    "esd_simplex",
    "evaluate",
    "f_vector",
    "gamma_expand",
    "gamma_reconstruct",
    "h_polynomial",
    "h_via_words",
    "hop_classes",
    "interior_vertices",
    "is_flag",
    "is_palindromic",
    "is_real_rooted",
    "lift_interior_vertex",
    "link",
    "local_h",
    "local_h_of",
    "omega_vertices",
    "poly_add",
    "poly_mul",
    "poly_sub",
    "real_root_count",
    "run_checks",
    "savage_check",
    "stellar_subdivide_edge",
    "word_stats",
    "xi_coefficients",
]

__version__ = "0.1.0"
