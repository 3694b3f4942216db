import pytest

from apps.core.exceptions import CapExceededError, DomainMismatchError, InvariantViolation
from apps.core.utils import chunk_range
from apps.permutations.domain import Code, MultisetSpec, Permutation
from apps.permutations.services import parse_permutation
from apps.foata.services import is_foata_fixed_point, is_strong_fixed_point
from apps.han.services import han_h
from apps.verification.checks import CheckOutcome
from apps.verification.services import (
    check_n,
    distribution,
    enumerate_codes,
    enumerate_rearrangements,
    enumerate_sn,
    fixed_points_of_h,
    foata_only_fixed_point,
    q_factorial,
    q_multinomial,
    word_family,
)
from apps.verification.services.polynomial import _divide_exact
from apps.verification.services.verification_service import VerificationService, merge_outcomes


class TestEnumeration:

    def test_sn_lexicographic(self):
        assert [str(sigma) for sigma in enumerate_sn(3)] == ['123', '132', '213', '231', '312', '321']

    def test_rearrangements(self):
        words = list(enumerate_rearrangements(MultisetSpec((2, 1))))
        assert [str(word) for word in words] == ['112', '121', '211']
        assert all(word.spec == MultisetSpec((2, 1)) for word in words)

    def test_class_size_matches(self):
        spec = MultisetSpec((2, 2, 1))
        assert len(list(enumerate_rearrangements(spec))) == spec.class_size() == 30

    def test_codes(self):
        assert list(enumerate_codes(2)) == [Code((0, 0)), Code((0, 1))]
        assert len(list(enumerate_codes(4))) == 24

    def test_word_family(self):
        assert [spec.m for spec in word_family(3, 4)] == [(1, 1, 1), (1, 2), (2, 1), (3,)]

    def test_word_family_alphabet_bound(self):
        assert all(spec.k <= 2 for spec in word_family(5, 2))

    def test_n_cap(self):
        with pytest.raises(CapExceededError):
            check_n(10)
        check_n(10, cap=10)

    def test_class_cap(self):
        with pytest.raises(CapExceededError):
            list(enumerate_rearrangements(MultisetSpec((3, 2, 2, 2)), cap=1000))


class TestPolynomials:

    def test_q_factorial(self):
        assert q_factorial(0) == [1]
        assert q_factorial(3) == [1, 2, 2, 1]
        assert q_factorial(4) == [1, 3, 5, 6, 5, 3, 1]

    def test_q_multinomial(self):
        assert q_multinomial((1, 1)) == [1, 1]
        assert q_multinomial((2, 2)) == [1, 1, 2, 1, 1]

    def test_q_multinomial_total(self):
        assert sum(q_multinomial((3, 2, 2, 2))) == 7560

    def test_inexact_division(self):
        import numpy as np
        with pytest.raises(InvariantViolation):
            _divide_exact(np.array([1, 0, 1], dtype=np.int64), np.array([1, 1], dtype=np.int64))


class TestDistribution:

    def test_maj_over_s3(self):
        table = distribution('maj', enumerate_sn(3))
        assert table.coefficients == (1, 2, 2, 1)
        assert table.population == 6

    def test_inv_over_s4(self):
        assert distribution('inv', enumerate_sn(4)).coefficients == (1, 3, 5, 6, 5, 3, 1)

    def test_rows(self):
        assert list(distribution('des', enumerate_sn(3)).rows()) == [(0, 1), (1, 4), (2, 1)]

    def test_vector_statistic_rejected(self):
        with pytest.raises(DomainMismatchError):
            distribution('tvec', enumerate_sn(3))

    def test_empty_population(self):
        with pytest.raises(DomainMismatchError):
            distribution('maj', [])


class TestFixedPoints:

    def test_small(self):
        assert [str(sigma) for sigma in fixed_points_of_h(3)] == ['123', '213', '231', '321']

    @pytest.mark.parametrize('n', [1, 2, 5, 7])
    def test_count(self, n):
        assert len(fixed_points_of_h(n)) == 2 ** (n - 1)

    def test_n8_contains_example(self):
        assert parse_permutation('45367281') in fixed_points_of_h(8)

    def test_all_fixed_and_strong(self):
        for sigma in fixed_points_of_h(6):
            assert han_h(sigma) == sigma
            assert is_strong_fixed_point(sigma)

    def test_foata_only_witness(self):
        assert foata_only_fixed_point(3) is None
        witness = foata_only_fixed_point(5)
        assert witness is not None
        assert is_foata_fixed_point(witness)
        assert han_h(witness) != witness


class TestMergeOutcomes:

    def test_least_index_wins(self):
        outcomes = [
            CheckOutcome(population=2),
            CheckOutcome(population=2, counterexample={'input': '321'}, index=3),
            CheckOutcome(population=2, counterexample={'input': '231'}, index=2),
        ]
        merged = merge_outcomes(outcomes)
        assert merged.index == 2
        assert merged.counterexample == {'input': '231'}
        assert merged.population == 6

    def test_all_passed(self):
        assert merge_outcomes([CheckOutcome(population=3), CheckOutcome(population=3)]).passed

    def test_chunk_range_covers(self):
        assert chunk_range(10, 3) == [(0, 4), (4, 7), (7, 10)]
        assert chunk_range(2, 5) == [(0, 1), (1, 2)]


class TestVerificationService:

    def test_single_check(self):
        report = VerificationService().run_check('h_equals_im', 4)
        assert report.passed
        assert report.population == 24
        assert report.counterexample is None

    def test_partitions_agree(self):
        single = VerificationService(partitions=1).run_check('h_maps_maj_to_inv', 5)
        split = VerificationService(partitions=4).run_check('h_maps_maj_to_inv', 5)
        assert split.partitions == 4
        assert (split.passed, split.population) == (single.passed, single.population)

    def test_failing_check_reports_first_counterexample(self, failing_check):
        for partitions in (1, 3):
            report = VerificationService(partitions=partitions).run_check(failing_check.name, 3)
            assert not report.passed
            assert report.index == 2
            assert report.counterexample['input'] == '213'
            assert report.counterexample['first'] == 2

    def test_word_population(self):
        report = VerificationService().run_check('t_sum_equals_inv', 3)
        assert report.passed
        assert report.population == 13
        assert report.notes['classes'] == 4

    def test_population_check_not_partitioned(self):
        report = VerificationService(partitions=4).run_check('h_bijective', 4)
        assert report.passed
        assert report.partitions == 1

    def test_cap(self):
        with pytest.raises(CapExceededError):
            VerificationService().run_check('h_equals_im', 10)

    def test_unknown_check(self):
        with pytest.raises(DomainMismatchError):
            VerificationService().run_check('nonexistent', 3)

    @pytest.mark.parametrize('suite', ['stats', 'codes', 'han', 'foata', 'fixed', 'mahonian'])
    def test_suites_pass(self, suite):
        reports = VerificationService().run_suite(suite, 4)
        assert reports
        assert all(report.passed for report in reports)
        assert {report.suite for report in reports} == {suite}

    def test_suite_order(self):
        reports = VerificationService().run_suite('han', 2)
        assert [report.n for report in reports[:2]] == [1, 2]

    def test_unknown_suite(self):
        with pytest.raises(DomainMismatchError):
            VerificationService().run_suite('everything', 3)

    def test_fixed_point_theorem(self):
        report = VerificationService().verify_fixed_point_theorem(5)
        assert report.passed
        assert report.notes['fixed_points'] == 16

    def test_named_verifications(self):
        service = VerificationService()
        assert service.verify_h_equals_im(5).passed
        assert service.verify_complement_commutation(5).passed

    def test_mahonian_permutations(self):
        report = VerificationService().verify_mahonian(5)
        assert report.passed
        assert report.population == 120

    def test_mahonian_words(self):
        report = VerificationService().verify_mahonian(MultisetSpec((2, 1, 2)))
        assert report.passed
        assert report.population == 30
        assert report.notes['spec'] == '1^2,2^1,3^2'

    def test_table(self):
        service = VerificationService()
        assert service.table('maj', 3).coefficients == (1, 2, 2, 1)
        assert service.table('z', MultisetSpec((2, 2))).coefficients == (1, 1, 2, 1, 1)

    def test_table_rejects_vectors(self):
        with pytest.raises(DomainMismatchError):
            VerificationService().table('svec', 3)

    def test_fixed_points(self):
        assert VerificationService().fixed_points(2) == [Permutation((1, 2)), Permutation((2, 1))]


@pytest.mark.slow
class TestExhaustiveAtEight:

    @pytest.mark.parametrize('check_name', [
        'fixed_point_count',
        's_sum_equals_maj',
        'code_complement_identities',
        'phi_maps_maj_to_inv',
        'trace_identities',
    ])
    def test_check_passes(self, check_name):
        report = VerificationService().run_check(check_name, 8)
        assert report.passed, report.counterexample
        assert report.n == 8
