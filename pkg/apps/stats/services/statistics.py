"""
Statistics Service - descent set, des, maj, inv, the Z-statistic, cyclic
intervals and the t- and s-vectors.

Every function takes any sequence of positive integers (Permutation, Word
or a plain tuple). Positions are 1-based in every result.
"""
from dataclasses import dataclass
from typing import FrozenSet, Optional, Sequence, Union

from apps.core.exceptions import DomainMismatchError
from apps.permutations.domain import StatVector


class _Infinity:
    """The distinguished right endpoint of ]]x, oo]]."""

    def __repr__(self):
        return 'INFINITY'

    def __str__(self):
        return '∞'


INFINITY = _Infinity()


def _alphabet_size(word: Sequence[int], k: Optional[int] = None) -> int:
    if k is not None:
        return k
    declared = getattr(word, 'alphabet_size', None)
    if declared is not None:
        return declared
    return max(word) if len(word) else 0


# ==================== Descents ====================

def descent_set(word: Sequence[int]) -> FrozenSet[int]:
    """Des(w) = {i : 1 <= i <= n-1, w_i > w_{i+1}}."""
    return frozenset(
        position for position in range(1, len(word))
        if word[position - 1] > word[position]
    )


def des(word: Sequence[int]) -> int:
    return len(descent_set(word))


def maj(word: Sequence[int]) -> int:
    """Major index: sum of the descent positions."""
    return sum(descent_set(word))


def inv(word: Sequence[int]) -> int:
    """Number of pairs i < j with w_i > w_j."""
    letters = list(word)
    return sum(
        1
        for i in range(len(letters))
        for j in range(i + 1, len(letters))
        if letters[i] > letters[j]
    )


def z_statistic(word: Sequence[int], k: Optional[int] = None) -> int:
    """
    Z(w) = sum over letter pairs i < j of maj(w_ij), where w_ij keeps only
    the letters equal to i or j.

    Pairs are taken over the declared alphabet [k]; absent letters give empty
    or constant subwords which contribute 0.
    """
    k = _alphabet_size(word, k)
    total = 0
    for low in range(1, k + 1):
        for high in range(low + 1, k + 1):
            subword = [letter for letter in word if letter == low or letter == high]
            total += maj(subword)
    return total


# ==================== Cyclic intervals ====================

@dataclass(frozen=True)
class CyclicInterval:
    """
    The cyclic interval ]]lo, hi]] on the alphabet [k].

    - lo <= hi: {z : lo < z <= hi}
    - lo > hi:  {z : z > lo or z <= hi}
    - hi = INFINITY: {z : z > lo}
    """
    lo: int
    hi: Union[int, _Infinity]
    k: int

    def __contains__(self, z: int) -> bool:
        return cyclic_contains(self, z)

    def members(self) -> FrozenSet[int]:
        return frozenset(z for z in range(1, self.k + 1) if cyclic_contains(self, z))


def cyclic_contains(interval: CyclicInterval, z: int) -> bool:
    if not 1 <= z <= interval.k:
        raise DomainMismatchError(f"letter {z} is outside the alphabet [1, {interval.k}]", token=str(z))
    lo, hi = interval.lo, interval.hi
    if hi is INFINITY:
        return z > lo
    if lo <= hi:
        return lo < z <= hi
    return z > lo or z <= hi


# ==================== t- and s-vectors ====================

def t_vector(word: Sequence[int]) -> StatVector:
    """t_i(w) = #{j < i : w_j in ]]w_i, oo]]}, i.e. earlier letters greater than w_i."""
    letters = list(word)
    return StatVector(tuple(
        sum(1 for j in range(i) if letters[j] > letters[i])
        for i in range(len(letters))
    ))


def s_vector(word: Sequence[int], k: Optional[int] = None) -> StatVector:
    """s_i(w) = #{j < i : w_j in ]]w_i, w_{i+1}]]}, with w_{n+1} = oo."""
    letters = list(word)
    k = _alphabet_size(word, k)
    n = len(letters)
    entries = []
    for i in range(n):
        hi = letters[i + 1] if i + 1 < n else INFINITY
        interval = CyclicInterval(letters[i], hi, k)
        entries.append(sum(1 for j in range(i) if cyclic_contains(interval, letters[j])))
    return StatVector(tuple(entries))
