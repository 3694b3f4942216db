import pytest
from hypothesis import given

from apps.codes.services import cyclic_major_encode, lehmer_encode
from apps.core.exceptions import DomainMismatchError
from apps.permutations.domain import Permutation, StatVector
from apps.permutations.services import parse_input
from apps.stats.services import (
    INFINITY,
    CyclicInterval,
    FenwickTree,
    StatisticKind,
    StatisticRegistry,
    cyclic_contains,
    des,
    descent_set,
    inv,
    inv_fast,
    maj,
    s_vector,
    s_vector_fast,
    t_vector,
    t_vector_fast,
    z_statistic,
)
from tests.strategies import permutations, words


class TestDescents:

    def test_word_example(self, sample_word):
        assert descent_set(sample_word) == frozenset({1, 4, 6, 7})
        assert des(sample_word) == 4
        assert maj(sample_word) == 18

    def test_permutation_example(self):
        assert maj(parse_input('38516427')) == 16

    def test_identity(self):
        assert descent_set(Permutation.identity(6)) == frozenset()
        assert maj(Permutation.identity(6)) == 0

    def test_reversal(self):
        assert descent_set(Permutation.reversal(5)) == frozenset({1, 2, 3, 4})


class TestInversions:

    def test_word_example(self, sample_word):
        assert inv(sample_word) == 9

    def test_reversal(self):
        assert inv(Permutation.reversal(7)) == 21

    def test_second_word(self):
        assert inv(parse_input('312432143')) == 13


class TestZStatistic:

    def test_word_example(self, sample_word):
        assert z_statistic(sample_word) == 16

    def test_sorted_word(self):
        assert z_statistic(parse_input('1234')) == 0

    @given(permutations(max_n=7))
    def test_equals_inv_on_permutations(self, sigma):
        assert z_statistic(sigma) == inv(sigma)


class TestCyclicInterval:

    def test_wraps(self):
        assert 3 in CyclicInterval(8, 5, 8)

    def test_degenerate_is_empty(self):
        assert CyclicInterval(4, 4, 6).members() == frozenset()

    def test_infinite(self):
        assert CyclicInterval(3, INFINITY, 4).members() == frozenset({4})

    def test_letter_outside_alphabet(self):
        with pytest.raises(DomainMismatchError):
            cyclic_contains(CyclicInterval(1, 2, 3), 4)


class TestVectors:

    def test_t_vector_word(self):
        assert t_vector(parse_input('312432143')).entries == (0, 1, 1, 0, 1, 3, 5, 0, 2)

    def test_s_vector_word(self):
        assert s_vector(parse_input('312432143')).entries == (0, 0, 1, 3, 3, 4, 5, 6, 2)

    def test_t_vector_permutation(self):
        assert t_vector(parse_input('38516427')).entries == (0, 0, 1, 3, 1, 3, 5, 1)

    def test_s_vector_permutation(self):
        assert s_vector(parse_input('38516427')).entries == (0, 1, 1, 2, 3, 4, 4, 1)

    def test_identity(self):
        assert t_vector(Permutation.identity(5)).entries == (0,) * 5
        assert s_vector(Permutation.identity(5)).entries == (0,) * 5

    def test_vectors_are_stat_vectors(self):
        assert isinstance(t_vector(Permutation.identity(3)), StatVector)

    @given(permutations())
    def test_vectors_equal_codes(self, sigma):
        assert t_vector(sigma) == lehmer_encode(sigma)
        assert s_vector(sigma) == cyclic_major_encode(sigma)
        assert {t_vector(sigma), lehmer_encode(sigma)} == {lehmer_encode(sigma)}

    def test_vector_differs_from_tuple(self):
        assert t_vector(parse_input('312')) != (0, 1, 1)

    @given(permutations())
    def test_sums(self, sigma):
        assert t_vector(sigma).total() == inv(sigma)
        assert s_vector(sigma).total() == maj(sigma)

    @given(words())
    def test_t_sum_on_words(self, word):
        assert t_vector(word).total() == inv(word)

    @given(permutations())
    def test_lehmer_descent_criterion(self, sigma):
        t = t_vector(sigma)
        for i in range(1, sigma.n):
            assert (t[i - 1] >= t[i]) == (sigma[i - 1] < sigma[i])


class TestFenwick:

    def test_counts(self):
        tree = FenwickTree(5)
        for letter in (3, 1, 3, 5):
            tree.increment(letter)
        assert tree.prefix_sum(3) == 3
        assert tree.count_between(1, 3) == 2
        assert tree.count_above(3) == 1
        assert tree.prefix_sum(0) == 0

    @given(words())
    def test_matches_naive_on_words(self, word):
        assert t_vector_fast(word) == t_vector(word)
        assert s_vector_fast(word) == s_vector(word)
        assert inv_fast(word) == inv(word)

    @given(permutations())
    def test_matches_naive_on_permutations(self, sigma):
        assert s_vector_fast(sigma) == s_vector(sigma)


class TestRegistry:

    def test_scalar_names(self):
        assert set(StatisticRegistry.names(StatisticKind.SCALAR)) == {'maj', 'inv', 'z', 'des'}

    def test_mahonian(self):
        assert [s.name for s in StatisticRegistry.mahonian()] == ['maj', 'inv', 'z']

    def test_evaluate_plain_values(self, sample_word):
        assert StatisticRegistry.require('desset').evaluate(sample_word) == [1, 4, 6, 7]
        assert StatisticRegistry.require('tvec').evaluate(parse_input('38516427')) == [0, 0, 1, 3, 1, 3, 5, 1]

    def test_unknown(self):
        with pytest.raises(DomainMismatchError):
            StatisticRegistry.require('exc')
