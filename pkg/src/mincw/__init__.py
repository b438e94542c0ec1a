"""Counting, bounding, and maximizing the minimal codewords of binary
linear codes: exact enumeration, multiplicity-vector formulas, exhaustive
and censused maxima, bounds, and conjecture checkers.
"""

from __future__ import annotations

from .bounds import (
    BoundsReport,
    agrell_ub,
    binomial_sum_ub,
    bounds_report,
    improved_ub,
    kashyap_lb,
    matroid_ub,
    projective_base_lb,
    random_coding_lb,
    trivial_ub,
)
from .census import (
    CensusResult,
    census_max,
    census_max_folded,
    construct_double_unit_code,
    construct_projective_base_code,
)
from .codewords import (
    MinimalSet,
    ReductionTrace,
    a_vector,
    is_minimal_in,
    minimal_codewords_bruteforce,
    minimal_codewords_systematic,
    reduce_code,
)
from .counting import (
    AVector,
    breakdown,
    count_canonical_base,
    count_general,
    count_t1,
    count_t2,
    count_t3,
    leading_term,
    leading_term_ordered,
)
from .errors import (
    BudgetError,
    CrossCheckError,
    DomainError,
    FormatError,
    InvalidCodeError,
    MincwError,
)
from .gf2_core import (
    BinaryCode,
    BitVec,
    SystematicCode,
    bitvec_parse,
    parse_matrix,
    read_matrix_file,
    to_systematic,
)
from .kernels import BACKEND
from .mgsets import (
    MGCatalog,
    build_catalog,
    is_mg_pair,
    is_minimal_generating,
    projective_bases,
)
from .optimize import (
    Composition,
    MaxMinResult,
    canonicalize_avector,
    check_conjecture_leading,
    check_conjecture_t3,
    conjectured_t3_vector,
    is_canonical_avector,
    maxmin,
    maxmin_closed_t1,
    maxmin_closed_t2,
    symmetric_opt,
    table,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "BACKEND",
    "AVector",
    "BinaryCode",
    "BitVec",
    "BoundsReport",
    "BudgetError",
    "CensusResult",
    "Composition",
    "CrossCheckError",
    "DomainError",
    "FormatError",
    "InvalidCodeError",
    "MGCatalog",
    "MaxMinResult",
    "MincwError",
    "MinimalSet",
    "ReductionTrace",
    "SystematicCode",
    "a_vector",
    "agrell_ub",
    "binomial_sum_ub",
    "bitvec_parse",
    "bounds_report",
    "breakdown",
    "build_catalog",
    "canonicalize_avector",
    "census_max",
    "census_max_folded",
    "check_conjecture_leading",
    "check_conjecture_t3",
    "conjectured_t3_vector",
    "construct_double_unit_code",
    "construct_projective_base_code",
    "count_canonical_base",
    "count_general",
    "count_t1",
    "count_t2",
    "count_t3",
    "improved_ub",
    "is_canonical_avector",
    "is_mg_pair",
    "is_minimal_generating",
    "is_minimal_in",
    "kashyap_lb",
    "leading_term",
    "leading_term_ordered",
    "matroid_ub",
    "maxmin",
    "maxmin_closed_t1",
    "maxmin_closed_t2",
    "minimal_codewords_bruteforce",
    "minimal_codewords_systematic",
    "parse_matrix",
    "projective_base_lb",
    "projective_bases",
    "random_coding_lb",
    "read_matrix_file",
    "reduce_code",
    "symmetric_opt",
    "table",
    "to_systematic",
    "trivial_ub",
]
