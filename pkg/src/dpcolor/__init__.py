"""Exact DP-coloring of small multigraphs.

Full m-fold covers are stored as one permutation per edge. The package counts
colorings of a cover, finds the DP color function and its dual by exhaustive
search over normalized covers, performs deletion and contraction on covers,
and evaluates the known closed forms for trees, cycles and related families.
"""

from .counting import (
    color_function_table,
    color_function_value,
    count_colorings,
    count_colorings_oracle,
    dp_color_function,
    dual_dp_color_function,
    ordering_lower_bound,
)
from .cover import (
    Cover,
    Limits,
    canonical_cover,
    cover_contract,
    cover_delete,
    enumerate_full_covers,
    lift_to_multigraph,
    normalize,
    random_cover,
    relabel,
    twin_condition,
    twister,
)
from .errors import InputError, ParseError, ResourceLimitError
from .formulas import auto_formula, chromatic_polynomial
from .multigraph import MultiGraph, contract_edge, delete_edge, underlying_graph
from .polynomial import IntPolynomial
from .relations import dc_bounds_check, dc_check_cover, degree_gap_check, gap_table
