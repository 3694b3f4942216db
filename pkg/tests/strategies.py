"""Hypothesis strategies for permutations, words and codes."""
from hypothesis import strategies as st

from apps.permutations.domain import Code, Permutation, Word


def permutations(min_n: int = 1, max_n: int = 8):
    return st.integers(min_n, max_n).flatmap(
        lambda n: st.permutations(range(1, n + 1))
    ).map(lambda values: Permutation(tuple(values)))


def words(max_n: int = 8, max_k: int = 4):
    return st.integers(1, max_k).flatmap(
        lambda k: st.lists(st.integers(1, k), min_size=1, max_size=max_n)
    ).map(lambda letters: Word(tuple(letters)))


def codes(max_n: int = 8):
    return st.integers(1, max_n).flatmap(
        lambda n: st.tuples(*(st.integers(0, i - 1) for i in range(1, n + 1)))
    ).map(Code)
