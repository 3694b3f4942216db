"""
Fenwick tree (binary indexed tree) over the alphabet, and the O(n log k)
t-vector, s-vector and inversion count built on it.

The naive scans in `statistics` are the reference; these must agree with
them entry for entry.
"""
from typing import List, Optional, Sequence

from apps.permutations.domain import StatVector
from apps.stats.services.statistics import _alphabet_size


class FenwickTree:
    """
    Counts of letters seen so far, indexed by letter 1..capacity.

    `increment` marks one more occurrence of a letter and `prefix_sum(x)`
    returns how many seen letters are <= x; both take O(log capacity).
    """

    def __init__(self, capacity: int) -> None:
        assert capacity >= 0, "capacity must be nonnegative"
        self.capacity = capacity
        self.tree: List[int] = [0] * (capacity + 1)
        self.total = 0

    def increment(self, letter: int, amount: int = 1) -> None:
        assert 1 <= letter <= self.capacity, "letter out of bounds"
        self.total += amount
        index = letter
        while index <= self.capacity:
            self.tree[index] += amount
            index += index & -index

    def prefix_sum(self, letter: int) -> int:
        """Number of seen letters <= letter; 0 for letter <= 0."""
        index = min(letter, self.capacity)
        result = 0
        while index > 0:
            result += self.tree[index]
            index -= index & -index
        return result

    def count_between(self, lo: int, hi: int) -> int:
        """Seen letters z with lo < z <= hi."""
        return self.prefix_sum(hi) - self.prefix_sum(lo)

    def count_above(self, lo: int) -> int:
        return self.total - self.prefix_sum(lo)


def t_vector_fast(word: Sequence[int], k: Optional[int] = None) -> StatVector:
    tree = FenwickTree(_alphabet_size(word, k))
    entries = []
    for letter in word:
        entries.append(tree.count_above(letter))
        tree.increment(letter)
    return StatVector(tuple(entries))


def s_vector_fast(word: Sequence[int], k: Optional[int] = None) -> StatVector:
    letters = list(word)
    tree = FenwickTree(_alphabet_size(word, k))
    entries = []
    for i, letter in enumerate(letters):
        if i + 1 == len(letters):
            entries.append(tree.count_above(letter))
        elif letter <= letters[i + 1]:
            entries.append(tree.count_between(letter, letters[i + 1]))
        else:
            # Wrapped interval: above lo, or at most hi
            entries.append(tree.count_above(letter) + tree.prefix_sum(letters[i + 1]))
        tree.increment(letter)
    return StatVector(tuple(entries))


def inv_fast(word: Sequence[int], k: Optional[int] = None) -> int:
    return t_vector_fast(word, k).total()
