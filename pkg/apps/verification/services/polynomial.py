"""
Independent q-analogue oracles: [n]_q! = prod_{i=1}^{n} (1 + q + ... + q^{i-1})
and the q-multinomial [n]_q! / prod [m_i]_q!.

Shares no code with the statistics; coefficients come from integer
polynomial arithmetic in numpy.
"""
from functools import reduce
from typing import List, Sequence

import numpy as np

from apps.core.exceptions import InvariantViolation


def q_integer(i: int) -> np.ndarray:
    """[i]_q = 1 + q + ... + q^{i-1}, lowest degree first."""
    return np.ones(i, dtype=np.int64)


def _q_factorial_array(n: int) -> np.ndarray:
    factors = [q_integer(i) for i in range(1, n + 1)]
    return reduce(np.convolve, factors, np.ones(1, dtype=np.int64))


def q_factorial(n: int) -> List[int]:
    """Coefficients c_0..c_{n(n-1)/2} of [n]_q!."""
    return [int(c) for c in _q_factorial_array(n)]


def _divide_exact(numerator: np.ndarray, denominator: np.ndarray) -> np.ndarray:
    """Polynomial division, lowest degree first; the denominator has constant term 1."""
    length = len(numerator) - len(denominator) + 1
    remainder = numerator.copy()
    quotient = np.zeros(length, dtype=np.int64)
    for i in range(length):
        coefficient = remainder[i]
        quotient[i] = coefficient
        remainder[i:i + len(denominator)] -= coefficient * denominator
    if remainder.any():
        raise InvariantViolation("q-multinomial division left a remainder")
    return quotient


def q_multinomial(m: Sequence[int]) -> List[int]:
    """Coefficients of the q-multinomial for the multiplicities m."""
    quotient = _q_factorial_array(sum(m))
    for count in m:
        quotient = _divide_exact(quotient, _q_factorial_array(count))
    return [int(c) for c in quotient]
