"""Exact arithmetic for symmetric Grothendieck polynomials and the
saturation of their Newton polytopes."""

from .exactlp import convex_certificate
from .grothendieck import (
    CheckResult,
    MuChain,
    SchurExpansion,
    check_claim_a,
    check_claim_b,
    check_claim_c,
    check_lemma_prefix_sums,
    check_lemmas_random,
    grothendieck_lenart,
    grothendieck_setvalued,
    lenart_coefficient,
    mu_chain,
    schur_expansion,
    schur_polynomial,
    witness_tableau,
)
from .partitions import (
    Partition,
    convex_combination,
    dominance_leq,
    majorizes,
    pad,
    partitions_in_box,
    partitions_of_size,
    sort_decreasing,
)
from .polynomials import SparsePolynomial, poly_sum
from .polytopes import (
    Permutahedron,
    PointCloud,
    SnpVerdict,
    hull_membership,
    permutahedron_lattice_points,
    permutahedron_vertices,
    rado_contains,
    snp_check_bruteforce,
    snp_check_symmetric_fast,
)
from .tableaux import (
    Tableau,
    content,
    enumerate_lenart_tableaux,
    enumerate_set_valued,
    enumerate_ssyt,
    is_valid_lenart,
    is_valid_set_valued,
    is_valid_ssyt,
)

__all__ = [
    "CheckResult",
    "MuChain",
    "Partition",
    "Permutahedron",
    "PointCloud",
    "SchurExpansion",
    "SnpVerdict",
    "SparsePolynomial",
    "Tableau",
    "check_claim_a",
    "check_claim_b",
    "check_claim_c",
    "check_lemma_prefix_sums",
    "check_lemmas_random",
    "content",
    "convex_certificate",
    "convex_combination",
    "dominance_leq",
    "enumerate_lenart_tableaux",
    "enumerate_set_valued",
    "enumerate_ssyt",
    "grothendieck_lenart",
    "grothendieck_setvalued",
    "hull_membership",
    "is_valid_lenart",
    "is_valid_set_valued",
    "is_valid_ssyt",
    "lenart_coefficient",
    "majorizes",
    "mu_chain",
    "pad",
    "partitions_in_box",
    "partitions_of_size",
    "permutahedron_lattice_points",
    "permutahedron_vertices",
    "poly_sum",
    "rado_contains",
    "schur_expansion",
    "schur_polynomial",
    "snp_check_bruteforce",
    "snp_check_symmetric_fast",
    "sort_decreasing",
    "witness_tableau",
]
