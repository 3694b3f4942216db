"""
Verification Service - runs registered checks exhaustively, optionally split
into index-range partitions executed in-process or on Celery workers, and
collects the results into reports.
"""
import logging
from dataclasses import dataclass, field, replace
from typing import Any, Dict, List, Optional, Union

from celery import group
from django.conf import settings

from apps.core.exceptions import DomainMismatchError
from apps.core.utils import chunk_range, format_duration, stopwatch
from apps.permutations.domain import MultisetSpec, Permutation
from apps.stats.services import StatisticKind, StatisticRegistry
from apps.verification.checks import BaseCheck, CheckOutcome, CheckRegistry, CheckSuite, mahonian_outcome
from apps.verification.services import enumeration
from apps.verification.services.distribution import DistributionTable, distribution
from apps.verification.services.fixed_points import fixed_points_of_h
from apps.verification.services.polynomial import q_factorial, q_multinomial
from apps.verification.tasks import run_check_partition

logger = logging.getLogger(__name__)

SUITE_CHOICES = ['all'] + [suite.value for suite in CheckSuite]


@dataclass
class VerificationReport:
    """
    Outcome of one check at one size.

    A failed report always carries a counterexample whose `input` can be fed
    back to the CLI.
    """
    check_name: str
    suite: str
    n: int
    population: int
    passed: bool
    counterexample: Optional[Dict[str, Any]] = None
    index: Optional[int] = None
    elapsed: float = 0.0
    partitions: int = 1
    caps: Dict[str, Any] = field(default_factory=dict)
    notes: Dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'check_name': self.check_name,
            'suite': self.suite,
            'n': self.n,
            'population': self.population,
            'passed': self.passed,
            'counterexample': self.counterexample,
            'index': self.index,
            'elapsed': self.elapsed,
            'partitions': self.partitions,
            'caps': self.caps,
            'notes': self.notes,
        }


def merge_outcomes(outcomes: List[CheckOutcome]) -> CheckOutcome:
    """Combine partition outcomes; the failure with the least index wins."""
    failures = [outcome for outcome in outcomes if not outcome.passed]
    merged = CheckOutcome(
        population=sum(outcome.population for outcome in outcomes),
        notes=outcomes[0].notes if outcomes else {}
    )
    if failures:
        first = min(failures, key=lambda outcome: outcome.index if outcome.index is not None else -1)
        merged.counterexample = first.counterexample
        merged.index = first.index
    return merged


class VerificationService:
    """
    Runs verification checks against the configured caps.

    Single-partition, multi-partition and distributed runs of the same check
    produce identical reports apart from timing and the partition count.
    """

    def __init__(
        self,
        max_n: Optional[int] = None,
        max_class_size: Optional[int] = None,
        max_k: Optional[int] = None,
        partitions: Optional[int] = None,
        distributed: Optional[bool] = None
    ):
        self.max_n = enumeration.max_n(max_n)
        self.max_class_size = enumeration.max_class_size(max_class_size)
        self.max_k = max_k if max_k is not None else settings.MAHONIA_WORD_ALPHABET_MAX
        self.partitions = max(1, partitions if partitions is not None else settings.MAHONIA_PARTITIONS)
        self.distributed = settings.MAHONIA_DISTRIBUTED if distributed is None else distributed

    @property
    def context(self) -> Dict[str, Any]:
        return {
            'max_n': self.max_n,
            'max_class_size': self.max_class_size,
            'max_k': self.max_k,
        }

    def _create(self, check_name: str) -> BaseCheck:
        check = CheckRegistry.create_instance(check_name, self.context)
        if check is None:
            raise DomainMismatchError(f"unknown check '{check_name}'", token=check_name)
        return check

    # ==================== Running checks ====================

    def run_check(self, check_name: str, n: int) -> VerificationReport:
        """
        Run one check exhaustively at size n.

        Args:
            check_name: Registered check name
            n: Size of the population

        Returns:
            VerificationReport
        """
        check = self._create(check_name)
        enumeration.check_n(n, self.max_n)

        with stopwatch() as elapsed:
            size = check.population_size(n)
            ranges = chunk_range(size, self.partitions) if check.partitionable else [(0, size)]
            if len(ranges) > 1:
                outcome = self._run_partitions(check, n, ranges)
            else:
                outcome = check.run(n)

        report = VerificationReport(
            check_name=check.name,
            suite=check.suite.value,
            n=n,
            population=outcome.population,
            passed=outcome.passed,
            counterexample=outcome.counterexample,
            index=outcome.index,
            elapsed=elapsed[0],
            partitions=len(ranges),
            caps=self.context,
            notes=outcome.notes
        )
        self._log(report)
        return report

    def _run_partitions(self, check: BaseCheck, n: int, ranges) -> CheckOutcome:
        if self.distributed:
            logger.debug(f"Dispatching {check.name} n={n} as {len(ranges)} Celery tasks")
            job = group(
                run_check_partition.s(check.name, n, start, stop, self.context)
                for start, stop in ranges
            )
            outcomes = [CheckOutcome.from_dict(result) for result in job.apply_async().get()]
        else:
            logger.debug(f"Running {check.name} n={n} in {len(ranges)} partitions")
            outcomes = [check.run_range(n, start, stop) for start, stop in ranges]
        return merge_outcomes(outcomes)

    def _log(self, report: VerificationReport) -> None:
        summary = (
            f"{report.check_name} n={report.n}: {report.population} checked, "
            f"{'pass' if report.passed else 'FAIL'} in {format_duration(report.elapsed)}"
        )
        if report.passed:
            logger.info(summary)
        else:
            logger.warning(f"{summary}; counterexample {report.counterexample}")

    def run_suite(self, suite: str, n: int) -> List[VerificationReport]:
        """
        Run every check of a suite (or of all suites) for each size m = 1..n.

        Args:
            suite: One of SUITE_CHOICES
            n: Largest size

        Returns:
            Reports ordered by suite, check, then m
        """
        if suite not in SUITE_CHOICES:
            raise DomainMismatchError(f"unknown suite '{suite}'; expected one of {', '.join(SUITE_CHOICES)}", token=suite)
        enumeration.check_n(n, self.max_n)

        suites = list(CheckSuite) if suite == 'all' else [CheckSuite(suite)]
        reports = []
        for selected in suites:
            for check_class in CheckRegistry.get_by_suite(selected):
                for m in range(1, n + 1):
                    reports.append(self.run_check(check_class.name, m))
        failed = sum(1 for report in reports if not report.passed)
        logger.info(f"Suite {suite} up to n={n}: {len(reports)} reports, {failed} failed")
        return reports

    # ==================== Named verifications ====================

    def verify_h_equals_im(self, n: int) -> VerificationReport:
        return self.run_check('h_equals_im', n)

    def verify_complement_commutation(self, n: int) -> VerificationReport:
        return self.run_check('complement_commutation', n)

    def verify_fixed_point_theorem(self, n: int) -> VerificationReport:
        """
        The three-way equivalence on S_n plus the count 2^{n-1}; the notes
        carry a Phi-fixed permutation that H moves, when one exists.
        """
        pointwise = self.run_check('fixed_point_theorem', n)
        counted = self.run_check('fixed_point_count', n)
        failing = pointwise if not pointwise.passed else counted
        return replace(
            pointwise,
            passed=pointwise.passed and counted.passed,
            counterexample=failing.counterexample,
            index=failing.index,
            elapsed=pointwise.elapsed + counted.elapsed,
            notes={**pointwise.notes, **counted.notes}
        )

    def verify_mahonian(self, target: Union[int, MultisetSpec]) -> VerificationReport:
        """
        maj, inv and Z are equidistributed over S_n (target an int) or over
        R(X) (target a spec), and maj(w) = inv(Phi(w)) pointwise.
        """
        with stopwatch() as elapsed:
            population, expected = self._population(target)
            outcome = mahonian_outcome(population, expected)
        n = target if isinstance(target, int) else target.n
        notes = dict(outcome.notes)
        if isinstance(target, MultisetSpec):
            notes['spec'] = target.render()
        report = VerificationReport(
            check_name='mahonian',
            suite=CheckSuite.MAHONIAN.value,
            n=n,
            population=outcome.population,
            passed=outcome.passed,
            counterexample=outcome.counterexample,
            index=outcome.index,
            elapsed=elapsed[0],
            caps=self.context,
            notes=notes
        )
        self._log(report)
        return report

    def _population(self, target: Union[int, MultisetSpec]):
        if isinstance(target, MultisetSpec):
            words = list(enumeration.enumerate_rearrangements(target, self.max_class_size))
            if not words:
                raise DomainMismatchError("the spec describes the empty class")
            return words, q_multinomial(target.m)
        return list(enumeration.enumerate_sn(target, self.max_n)), q_factorial(target)

    # ==================== Queries ====================

    def fixed_points(self, n: int) -> List[Permutation]:
        return fixed_points_of_h(n, self.max_n)

    def table(self, stat_name: str, target: Union[int, MultisetSpec]) -> DistributionTable:
        """
        Distribution table of a scalar statistic over S_n or R(X).
        """
        statistic = StatisticRegistry.require(stat_name)
        if statistic.kind != StatisticKind.SCALAR:
            raise DomainMismatchError(f"statistic '{stat_name}' has no distribution table", token=stat_name)
        population, _ = self._population(target)
        return distribution(statistic, population)
