"""Counting, closed-form distributions and structural verdicts."""

from .structure import (classify_ck, nongrs_verdict, schur_evidence, schur_square_structure,
                        so_certificate, so_check)
from .subsets import (is_k_zero_sum_free, subset_sum_bruteforce, subset_sum_closed,
                      zero_sum_witness)
from .weights import (TABLES, ck_distribution, ck_wdist_formula, ck_wdist_fq, ck_wdist_fqstar,
                      mds_wdist, nmds_wdist_from_Amin, table_wdist)

__all__ = [
    "TABLES", "ck_distribution", "ck_wdist_formula", "ck_wdist_fq", "ck_wdist_fqstar",
    "classify_ck", "is_k_zero_sum_free", "mds_wdist", "nmds_wdist_from_Amin",
    "nongrs_verdict", "schur_evidence", "schur_square_structure", "so_certificate",
    "so_check", "subset_sum_bruteforce", "subset_sum_closed", "table_wdist",
    "zero_sum_witness",
]
