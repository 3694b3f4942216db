"""
Han services: C^x / C_x transforms, H and its traces.
"""
from .transforms import c_upper, c_lower, c_upper_inv, c_lower_inv, split_last
from .han import (
    TraceRow,
    ConstructionRow,
    last,
    reduce_c,
    reductions,
    han_h,
    han_h_via_codes,
    han_h_inverse,
    c_iteration_trace,
    cyclic_major_via_trace,
    l_sequence,
    han_construction_trace,
)

__all__ = [
    'c_upper',
    'c_lower',
    'c_upper_inv',
    'c_lower_inv',
    'split_last',
    'TraceRow',
    'ConstructionRow',
    'last',
    'reduce_c',
    'reductions',
    'han_h',
    'han_h_via_codes',
    'han_h_inverse',
    'c_iteration_trace',
    'cyclic_major_via_trace',
    'l_sequence',
    'han_construction_trace',
]
