"""Exact Schubert calculus over big integers: Chow rings of projective
spaces and Grassmannians, Young-tableau counting, Gaussian binomial Poincare
series, and integer-certified motivic decompositions of generalized
Severi-Brauer varieties."""

__version__ = "0.1.0"

from .chow import (
    CycleClass,
    Grassmannian,
    ProductSpace,
    Projective,
    cycle_class,
    degree,
    f_cycle,
    g_cycle,
    multiply,
    omega1_power,
    pieri_omega1,
    twisted_schur,
)
from .motives import (
    Correspondence,
    DecompositionCertificate,
    build_decomposition,
    compose,
    cong2_exact,
    composite_generators_d2,
    criterion,
    diagonal_projective,
    lift_beta,
    normalize_alpha,
    obstruction_scan,
    rational_generators,
    sb_indecomposable,
    sb_iso_criterion,
    transpose,
    verify_congruence,
)
from .partitions import Box, conjugate, contains, dual_in_box, enumerate_partitions, jumps
from .poincare import IntPolynomial, divides, gaussian_binomial, modn_multiplicities
from .tableaux import (
    count_ssyt,
    count_syt,
    enumerate_ssyt,
    enumerate_syt,
    overflow_terms_divisible,
    rs_identity,
)

__all__ = [
    "Box",
    "Correspondence",
    "CycleClass",
    "DecompositionCertificate",
    "Grassmannian",
    "IntPolynomial",
    "ProductSpace",
    "Projective",
    "build_decomposition",
    "compose",
    "composite_generators_d2",
    "cong2_exact",
    "conjugate",
    "contains",
    "count_ssyt",
    "count_syt",
    "criterion",
    "cycle_class",
    "degree",
    "diagonal_projective",
    "divides",
    "dual_in_box",
    "enumerate_partitions",
    "enumerate_ssyt",
    "enumerate_syt",
    "f_cycle",
    "g_cycle",
    "gaussian_binomial",
    "jumps",
    "lift_beta",
    "modn_multiplicities",
    "multiply",
    "normalize_alpha",
    "obstruction_scan",
    "omega1_power",
    "overflow_terms_divisible",
    "pieri_omega1",
    "rational_generators",
    "rs_identity",
    "sb_indecomposable",
    "sb_iso_criterion",
    "transpose",
    "twisted_schur",
    "verify_congruence",
]
