import pytest
from hypothesis import given

from apps.core.exceptions import DomainMismatchError, GapMismatchError
from apps.permutations.domain import Code, GappedPermutation, Permutation, complement
from apps.permutations.services import parse_permutation
from apps.codes.services import cyclic_major_encode
from apps.han.services import (
    c_iteration_trace,
    c_lower,
    c_lower_inv,
    c_upper,
    c_upper_inv,
    cyclic_major_via_trace,
    han_construction_trace,
    han_h,
    han_h_inverse,
    han_h_via_codes,
    l_sequence,
    last,
    reductions,
    split_last,
)
from apps.stats.services import inv, maj
from tests.strategies import permutations


class TestTransforms:

    def test_split_last(self, table_sigma):
        gapped = split_last(table_sigma)
        assert gapped.values == (3, 9, 2, 6, 4, 8, 5, 1)
        assert gapped.gap == 7

    def test_c_upper(self, table_sigma):
        assert c_upper(7, split_last(table_sigma)) == parse_permutation('52486173')

    def test_c_lower(self, table_sigma):
        assert c_lower(7, split_last(table_sigma)) == parse_permutation('38264751')

    def test_inverses(self, table_sigma):
        gapped = split_last(table_sigma)
        assert c_upper_inv(7, parse_permutation('52486173')) == gapped
        assert c_lower_inv(7, parse_permutation('38264751')) == gapped

    def test_lower_inverse_of_singleton(self):
        assert c_lower_inv(2, Permutation((1,))) == GappedPermutation((1,), gap=2)

    def test_gap_mismatch(self, table_sigma):
        with pytest.raises(GapMismatchError):
            c_upper(5, split_last(table_sigma))

    def test_pivot_out_of_range(self):
        with pytest.raises(DomainMismatchError):
            c_upper_inv(4, Permutation((1, 2)))

    def test_last_of_empty(self):
        with pytest.raises(DomainMismatchError):
            last(Permutation.empty())


class TestHan:

    def test_worked_example(self, table_sigma):
        assert han_h(table_sigma) == parse_permutation('496182537')

    def test_small(self):
        assert han_h(parse_permutation('312')) == parse_permutation('132')

    def test_singleton_and_empty(self):
        assert han_h(Permutation((1,))) == Permutation((1,))
        assert han_h(Permutation.empty()) == Permutation.empty()

    def test_inverse_example(self, table_sigma):
        assert han_h_inverse(parse_permutation('496182537')) == table_sigma

    @given(permutations())
    def test_recursion_matches_codes(self, sigma):
        assert han_h(sigma) == han_h_via_codes(sigma)

    @given(permutations())
    def test_maj_to_inv_and_last_letter(self, sigma):
        image = han_h_via_codes(sigma)
        assert inv(image) == maj(sigma)
        assert image[-1] == sigma[-1]

    @given(permutations())
    def test_inverse(self, sigma):
        assert han_h_inverse(han_h_via_codes(sigma)) == sigma

    @given(permutations())
    def test_commutes_with_complement(self, sigma):
        assert han_h(complement(sigma)) == complement(han_h(sigma))


class TestTraces:

    def test_reduction_chain(self, table_sigma):
        expected = ['392648517', '52486173', '2715364', '534162', '31254', '4231', '312', '12', '1']
        assert [str(sigma) for sigma in reductions(table_sigma)] == expected

    def test_l_sequence(self, table_sigma):
        assert l_sequence(table_sigma) == [1, 2, 2, 1, 4, 2, 4, 3, 7]

    def test_trace_rows(self, table_sigma):
        rows = c_iteration_trace(table_sigma)
        assert rows[0].last == 7
        assert rows[0].s_entry == 2
        assert rows[0].position == 9
        assert rows[-1].reduced == Permutation((1,))

    def test_cyclic_major_via_trace(self, table_sigma):
        assert cyclic_major_via_trace(table_sigma) == Code((0, 0, 1, 3, 1, 4, 3, 5, 2))

    def test_construction_first_row(self, table_sigma):
        row = han_construction_trace(table_sigma)[0]
        assert row.x == 7
        assert row.inner == parse_permutation('48617253')
        assert row.image == parse_permutation('496182537')

    def test_construction_last_row(self, table_sigma):
        row = han_construction_trace(table_sigma)[-1]
        assert row.inner == Permutation.empty()
        assert row.image == Permutation((1,))

    @given(permutations())
    def test_trace_reproduces_cyclic_major(self, sigma):
        assert cyclic_major_via_trace(sigma) == cyclic_major_encode(sigma)

    def test_reduction_codes_are_prefixes(self, table_sigma):
        assert cyclic_major_encode(reductions(table_sigma)[1]) == Code((0, 0, 1, 3, 1, 4, 3, 5))
        assert cyclic_major_encode(reductions(table_sigma)[6]) == Code((0, 0, 1))

    @given(permutations())
    def test_reduction_code_prefix_property(self, sigma):
        code = cyclic_major_encode(sigma)
        for i, reduced in enumerate(reversed(reductions(sigma)), start=1):
            assert cyclic_major_encode(reduced).entries == code.entries[:i]
