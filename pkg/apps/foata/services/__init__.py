"""
Foata services: Phi, partial Foata maps and strong fixed points.
"""
from .foata import (
    XFactorization,
    x_factorize,
    gamma,
    foata_phi,
    foata_phi_recursive,
    partial_foata,
    compose_partial_foata,
    is_strong_fixed_point,
    is_partial_foata_fixed_point,
    is_foata_fixed_point,
    is_strong_foata_class,
)

__all__ = [
    'XFactorization',
    'x_factorize',
    'gamma',
    'foata_phi',
    'foata_phi_recursive',
    'partial_foata',
    'compose_partial_foata',
    'is_strong_fixed_point',
    'is_partial_foata_fixed_point',
    'is_foata_fixed_point',
    'is_strong_foata_class',
]
