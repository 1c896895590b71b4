"""Double Schubert polynomials, balanced super labelings and Schubert complexes."""

from ._schubert import (
    bsl_count,
    complex_ranks,
    dd_zero,
    double_schubert,
    enumerate_bsl,
    evaluate,
    homology,
    ideal_generators,
    locus_membership,
    single_schubert,
    verify,
)

__all__ = [
    "bsl_count",
    "complex_ranks",
    "dd_zero",
    "double_schubert",
    "enumerate_bsl",
    "evaluate",
    "homology",
    "ideal_generators",
    "locus_membership",
    "single_schubert",
    "verify",
]
