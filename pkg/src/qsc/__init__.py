"""Exact combinatorics of compositions, column-strict composition tableaux,
row insertion with its inverse, and quasisymmetric basis expansions."""

from .compositions import (
    Composition,
    compositions,
    coarsenings,
    dominates,
    partitions,
    rearrangements,
    refinements,
    refines,
    reverse,
)
from .tableaux import (
    INF,
    Rows,
    immaculate_descent_set,
    immaculate_reading_word,
    is_immaculate,
    is_ssyct,
    is_standard,
    make_rows,
    semistandard_tableaux,
    shape_of,
    standard_tableaux,
    young_descent_set,
    young_reading_word,
)
from .insertion import (
    InsertionResult,
    RaptureResult,
    insert,
    insert_word,
    is_virtuous,
    rapture,
    uninsert,
)
from .dirt import enumerate_dirts, is_dirt, row_strip_shape, row_strips, superstandard
from .qsym import (
    BASES,
    DUAL_IMMACULATE,
    FUNDAMENTAL,
    IMMACULATE,
    MONOMIAL,
    YOUNG_NCSCHUR,
    YOUNG_QS,
    BasisExpansion,
    MExpr,
    check_conjectures,
    dimm_f_expansion,
    dimm_to_yqs,
    dual_immaculate_mexpr,
    expand_in,
    f_to_m,
    is_symmetric,
    m_to_f,
    monomial,
    monomial_coefficient_oracle,
    principal_specialization,
    quasi_shuffle,
    schur_m_expansion,
    yns_to_imm,
    young_qs_mexpr,
    yqs_f_expansion,
)
from .rw import Node, rw_dual, rw_forward, tree_to_dot, tree_to_json
from .verify import DEFAULT_MAX_N, SUITES, SuiteResult, run_suite

__all__ = [
    "Composition",
    "compositions",
    "coarsenings",
    "dominates",
    "partitions",
    "rearrangements",
    "refinements",
    "refines",
    "reverse",
    "INF",
    "Rows",
    "immaculate_descent_set",
    "immaculate_reading_word",
    "is_immaculate",
    "is_ssyct",
    "is_standard",
    "make_rows",
    "semistandard_tableaux",
    "shape_of",
    "standard_tableaux",
    "young_descent_set",
    "young_reading_word",
    "InsertionResult",
    "RaptureResult",
    "insert",
    "insert_word",
    "is_virtuous",
    "rapture",
    "uninsert",
    "enumerate_dirts",
    "is_dirt",
    "row_strip_shape",
    "row_strips",
    "superstandard",
    "BASES",
    "DUAL_IMMACULATE",
    "FUNDAMENTAL",
    "IMMACULATE",
    "MONOMIAL",
    "YOUNG_NCSCHUR",
    "YOUNG_QS",
    "BasisExpansion",
    "MExpr",
    "check_conjectures",
    "dimm_f_expansion",
    "dimm_to_yqs",
    "dual_immaculate_mexpr",
    "expand_in",
    "f_to_m",
    "is_symmetric",
    "m_to_f",
    "monomial",
    "monomial_coefficient_oracle",
    "principal_specialization",
    "quasi_shuffle",
    "schur_m_expansion",
    "yns_to_imm",
    "young_qs_mexpr",
    "yqs_f_expansion",
    "Node",
    "rw_dual",
    "rw_forward",
    "tree_to_dot",
    "tree_to_json",
    "DEFAULT_MAX_N",
    "SUITES",
    "SuiteResult",
    "run_suite",
]
