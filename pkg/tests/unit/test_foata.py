import pytest
from hypothesis import given

from apps.core.exceptions import DomainMismatchError
from apps.permutations.domain import Permutation, Word
from apps.permutations.services import parse_input, parse_permutation
from apps.foata.services import (
    compose_partial_foata,
    foata_phi,
    foata_phi_recursive,
    gamma,
    is_foata_fixed_point,
    is_partial_foata_fixed_point,
    is_strong_fixed_point,
    is_strong_foata_class,
    partial_foata,
    x_factorize,
)
from apps.stats.services import inv, maj
from tests.strategies import permutations, words


class TestXFactorization:

    def test_low_last_letter(self):
        factorization = x_factorize((3, 1), 2)
        assert factorization.blocks == (((3,), 1),)

    def test_high_last_letter(self):
        factorization = x_factorize((1, 4), 2)
        assert factorization.blocks == (((1,), 4),)

    def test_pivot_goes_low(self):
        factorization = x_factorize((4, 3, 2), 3)
        assert factorization.blocks == (((4,), 3), ((), 2))

    def test_reconstruct(self, sample_word):
        assert x_factorize(sample_word, 2).reconstruct() == tuple(sample_word)

    def test_empty(self):
        with pytest.raises(DomainMismatchError):
            x_factorize((), 1)


class TestGamma:

    def test_example(self):
        assert gamma(2, (3, 1)) == (1, 3)

    def test_empty(self):
        assert gamma(3, ()) == ()

    def test_keeps_type(self):
        image = gamma(2, Permutation((3, 1, 2)))
        assert isinstance(image, Permutation)
        assert image == Permutation((1, 3, 2))


class TestPhi:

    def test_small(self):
        assert foata_phi(parse_permutation('312')) == parse_permutation('132')

    def test_fixed_but_not_strong(self):
        sigma = parse_permutation('14235')
        assert foata_phi(sigma) == sigma
        assert not is_strong_fixed_point(sigma)

    def test_word_keeps_spec(self, sample_word):
        image = foata_phi(sample_word)
        assert isinstance(image, Word)
        assert image.spec == sample_word.spec

    def test_word_example_statistics(self, sample_word):
        assert inv(foata_phi(sample_word)) == maj(sample_word) == 18

    @given(words())
    def test_maj_to_inv_on_words(self, word):
        image = foata_phi(word)
        assert inv(image) == maj(word)
        assert image[-1] == word[-1]
        assert sorted(image) == sorted(word)

    @given(words())
    def test_recursion_agrees(self, word):
        assert foata_phi_recursive(word) == foata_phi(word)

    @given(permutations())
    def test_partial_maps_compose_to_phi(self, sigma):
        assert compose_partial_foata(sigma) == foata_phi(sigma)


class TestPartialFoata:

    def test_example(self):
        assert partial_foata(3, parse_permutation('312')) == parse_permutation('132')

    def test_first_map_is_identity(self):
        sigma = parse_permutation('38516427')
        assert partial_foata(1, sigma) == sigma

    def test_k_out_of_range(self):
        with pytest.raises(DomainMismatchError):
            partial_foata(4, parse_permutation('312'))


class TestFixedPoints:

    def test_strong_fixed_point(self):
        assert is_strong_fixed_point(parse_permutation('45367281'))

    def test_not_strong(self):
        assert not is_strong_fixed_point(parse_permutation('34125678'))

    @given(permutations())
    def test_strong_iff_every_partial_map_fixes(self, sigma):
        assert is_strong_fixed_point(sigma) == is_partial_foata_fixed_point(sigma)

    @given(permutations())
    def test_strong_implies_phi_fixed(self, sigma):
        if is_strong_fixed_point(sigma):
            assert is_foata_fixed_point(sigma)

    def test_whole_symmetric_group_is_a_class(self):
        members = [parse_input(text) for text in ('123', '132', '213', '231', '312', '321')]
        assert is_strong_foata_class(members)

    def test_mixed_sizes(self):
        with pytest.raises(DomainMismatchError):
            is_strong_foata_class([Permutation((1,)), Permutation((1, 2))])
