"""
Code Service - the Lehmer (inversion) code I and the cyclic major code M,
both bijections S_n -> E_n, and the transform between them.
"""
from typing import List

from apps.core.exceptions import InvariantViolation
from apps.permutations.domain import Code, Permutation
from apps.stats.services.statistics import s_vector, t_vector


def _as_code(vector) -> Code:
    """Re-validate a statistic vector as a Code at the module seam."""
    return Code(tuple(vector))


# ==================== Lehmer code ====================

def lehmer_encode(sigma: Permutation) -> Code:
    """I(sigma) = (t_1, ..., t_n); the entries sum to inv(sigma)."""
    return _as_code(t_vector(sigma))


def lehmer_decode(code: Code) -> Permutation:
    """
    The unique sigma with I(sigma) = code.

    Reading right to left, sigma_i is the (t_i + 1)-th largest value not yet
    placed at a later position.
    """
    code = _as_code(code)
    remaining = list(range(1, code.n + 1))
    values = [0] * code.n
    for i in range(code.n, 0, -1):
        values[i - 1] = remaining.pop(len(remaining) - 1 - code[i - 1])
    return Permutation(tuple(values))


# ==================== Cyclic major code ====================

def cyclic_major_encode(sigma: Permutation) -> Code:
    """M(sigma) = (s_1, ..., s_n); the entries sum to maj(sigma) and s_n = n - sigma_n."""
    return _as_code(s_vector(sigma, sigma.n))


def _cyclic_order_from(start: int, n: int) -> List[int]:
    """start, start-1, ..., 1, n, n-1, ..., start+1."""
    return list(range(start, 0, -1)) + list(range(n, start, -1))


def cyclic_major_decode(code: Code) -> Permutation:
    """
    Recover sigma from (s_1, ..., s_n).

    sigma_n = n - s_n. Then for k = n-1 down to 1, walk the values cyclically
    downward from sigma_{k+1}, drop the ones already placed at positions
    > k, and take the (s_k + 1)-th survivor as sigma_k.
    """
    code = _as_code(code)
    n = code.n
    if n == 0:
        return Permutation.empty()

    values = [0] * n
    values[n - 1] = n - code[n - 1]
    placed = {values[n - 1]}
    for k in range(n - 1, 0, -1):
        survivors = [
            value for value in _cyclic_order_from(values[k], n)
            if value not in placed
        ]
        index = code[k - 1]
        if index >= len(survivors):
            raise InvariantViolation(
                f"survivor index {index + 1} out of range ({len(survivors)} survivors) at position {k}"
            )
        values[k - 1] = survivors[index]
        placed.add(values[k - 1])
    return Permutation(tuple(values))


# ==================== Transforms ====================

def t_to_s(t: Code) -> Code:
    """
    Inversion code to cyclic major code: s_n = t_n and, for i < n,
    s_i = t_i - t_{i+1} (mod i), taken in [0, i-1].
    """
    t = _as_code(t)
    n = t.n
    s = []
    for i in range(1, n):
        difference = t[i - 1] - t[i]
        s.append(difference if difference >= 0 else difference + i)
    if n:
        s.append(t[n - 1])
    return Code(tuple(s))


def s_to_t(s: Code) -> Code:
    """
    Cyclic major code to inversion code: t_n = s_n and, for i = n-1 down
    to 1, t_i is the representative of s_i + t_{i+1} modulo i in [0, i-1].
    """
    s = _as_code(s)
    n = s.n
    if n == 0:
        return Code(())
    t = [0] * n
    t[n - 1] = s[n - 1]
    for i in range(n - 1, 0, -1):
        t[i - 1] = (s[i - 1] + t[i]) % i
    return Code(tuple(t))


def code_complement(code: Code) -> Code:
    """c(a)_i = i - 1 - a_i."""
    code = _as_code(code)
    return Code(tuple(i - 1 - entry for i, entry in enumerate(code, start=1)))
