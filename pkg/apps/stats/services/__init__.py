"""
Statistics services for words and permutations.
"""
from .statistics import (
    INFINITY,
    CyclicInterval,
    cyclic_contains,
    descent_set,
    des,
    maj,
    inv,
    z_statistic,
    t_vector,
    s_vector,
)
from .fenwick import FenwickTree, t_vector_fast, s_vector_fast, inv_fast
from .registry import Statistic, StatisticKind, StatisticRegistry

__all__ = [
    'INFINITY',
    'CyclicInterval',
    'cyclic_contains',
    'descent_set',
    'des',
    'maj',
    'inv',
    'z_statistic',
    't_vector',
    's_vector',
    'FenwickTree',
    't_vector_fast',
    's_vector_fast',
    'inv_fast',
    'Statistic',
    'StatisticKind',
    'StatisticRegistry',
]
