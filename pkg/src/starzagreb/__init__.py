"""Exact double-star sequence and general second Zagreb index calculators."""

from .exactnum import (
    binomial,
    comtet_first_kind,
    nat_set,
    poly_mul,
    product_set,
    star_coefficient,
    stirling2,
)
from .graphs import (
    Graph,
    GraphFormatError,
    complete_graph,
    cycle_graph,
    degrees,
    double_star,
    encode_graph6,
    family_from_spec,
    isolated_count,
    make_family,
    parse_edge_list,
    parse_graph6,
    path_graph,
    random_graph,
    star_graph,
)
from .starseq import (
    StarTriangle,
    frequency_from_star,
    frequency_sequence,
    handshake_sum,
    inverse_degree_sum,
    star_from_frequency,
    star_sequence,
)
from .zagreb import (
    RationalGF,
    RecurrenceReport,
    generating_function,
    m2_direct,
    m2_from_frequency,
    m2_from_star,
    recurrence_check,
    recurrence_coefficients,
)

__version__ = "0.1.0"
