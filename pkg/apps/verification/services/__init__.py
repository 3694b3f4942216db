"""
Verification services: enumeration, distribution tables, the q-analogue
oracles and the fixed points of H.

VerificationService lives in `services.verification_service`; it is not
re-exported here because the checks import these modules.
"""
from .enumeration import (
    max_n,
    max_class_size,
    check_n,
    enumerate_sn,
    next_rearrangement,
    enumerate_rearrangements,
    enumerate_codes,
    word_family,
)
from .distribution import DistributionTable, distribution
from .polynomial import q_integer, q_factorial, q_multinomial
from .fixed_points import fixed_points_of_h, foata_only_fixed_point

__all__ = [
    'max_n',
    'max_class_size',
    'check_n',
    'enumerate_sn',
    'next_rearrangement',
    'enumerate_rearrangements',
    'enumerate_codes',
    'word_family',
    'DistributionTable',
    'distribution',
    'q_integer',
    'q_factorial',
    'q_multinomial',
    'fixed_points_of_h',
    'foata_only_fixed_point',
]
