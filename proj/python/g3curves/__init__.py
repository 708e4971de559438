"""Genus-3 curves with split Jacobians over GF(2^n).

Exact field arithmetic, the five genus-3 families with many involutions,
their elliptic quotients, Artin-Schreier cover reconstruction, and the
maximal-curve / N_q(3) machinery. Everything is backed by the C++ core.
"""

from ._core import (
    Field,
    construct_defect0,
    construct_defect3,
    count_points,
    cover_exists_hyp,
    cover_exists_nonhyp,
    elliptic_count,
    elliptic_invariants,
    elliptic_trace,
    find_curve_with_trace,
    frac_below_threshold,
    m_of,
    m_sequence,
    nq3,
    quotients,
    ss_cover_search,
    validate,
    verify_isogeny,
)

__all__ = [
    "Field",
    "construct_defect0",
    "construct_defect3",
    "count_points",
    "cover_exists_hyp",
    "cover_exists_nonhyp",
    "elliptic_count",
    "elliptic_invariants",
    "elliptic_trace",
    "find_curve_with_trace",
    "frac_below_threshold",
    "m_of",
    "m_sequence",
    "nq3",
    "quotients",
    "ss_cover_search",
    "validate",
    "verify_isogeny",
]

__version__ = "0.1.0"
