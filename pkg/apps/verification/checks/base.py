"""
Base Check - Abstract base classes for verification checks and the registry
that suites are built from.
"""
import itertools
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from enum import Enum
from math import factorial
from typing import Any, Dict, Iterator, List, Optional, Sequence, Type

from apps.core.exceptions import MahoniaException
from apps.permutations.domain import MultisetSpec, Word
from apps.verification.services.enumeration import (
    check_n,
    enumerate_codes,
    enumerate_rearrangements,
    enumerate_sn,
    max_class_size,
    word_family,
)


class CheckSuite(Enum):
    """Groups of checks selectable with `verify --suite`."""
    STATS = "stats"
    CODES = "codes"
    HAN = "han"
    FOATA = "foata"
    FIXED = "fixed"
    MAHONIAN = "mahonian"


class PopulationKind(Enum):
    """What a check enumerates for a given size n."""
    PERMUTATIONS = "sn"
    CODES = "codes"
    WORDS = "words"


@dataclass
class CheckOutcome:
    """Result of running a check over an index range of its population."""
    population: int
    counterexample: Optional[Dict[str, Any]] = None
    index: Optional[int] = None
    notes: Dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.counterexample is None

    def to_dict(self) -> Dict[str, Any]:
        return {
            'population': self.population,
            'counterexample': self.counterexample,
            'index': self.index,
            'notes': self.notes,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'CheckOutcome':
        return cls(
            population=data['population'],
            counterexample=data.get('counterexample'),
            index=data.get('index'),
            notes=data.get('notes') or {},
        )


def describe(element: Sequence[int]) -> Dict[str, Any]:
    """The re-checkable input part of a counterexample."""
    described = {'input': str(element)}
    if isinstance(element, Word):
        described['spec'] = element.spec.render()
    return described


class BaseCheck(ABC):
    """
    Abstract base class for all verification checks.

    A check is exhaustive over its population for a size n: S_n, E_n, or the
    R(X) family of that size. Populations are enumerated lexicographically so
    that an index identifies an element.
    """

    # Check metadata - override in subclasses
    name: str = "base_check"
    description: str = "Base check"
    suite: CheckSuite = CheckSuite.STATS
    population_kind: PopulationKind = PopulationKind.PERMUTATIONS
    partitionable: bool = True

    def __init__(self, context: Dict[str, Any] = None):
        """
        Args:
            context: Caps for this run (max_n, max_class_size, max_k)
        """
        self.context = context or {}
        self.max_n = self.context.get('max_n')
        self.max_class_size = self.context.get('max_class_size')
        self.max_k = self.context.get('max_k')

    # ==================== Population ====================

    def word_specs(self, n: int) -> List[MultisetSpec]:
        limit = max_class_size(self.max_class_size)
        return [spec for spec in word_family(n, self.max_k) if spec.class_size() <= limit]

    def skipped_specs(self, n: int) -> List[str]:
        limit = max_class_size(self.max_class_size)
        return [spec.render() for spec in word_family(n, self.max_k) if spec.class_size() > limit]

    def elements(self, n: int) -> Iterator[Sequence[int]]:
        if self.population_kind == PopulationKind.PERMUTATIONS:
            return enumerate_sn(n, self.max_n)
        if self.population_kind == PopulationKind.CODES:
            return enumerate_codes(n, self.max_n)
        return itertools.chain.from_iterable(
            enumerate_rearrangements(spec, self.max_class_size) for spec in self.word_specs(n)
        )

    def population_size(self, n: int) -> int:
        if self.population_kind == PopulationKind.WORDS:
            return sum(spec.class_size() for spec in self.word_specs(n))
        check_n(n, self.max_n)
        return factorial(n)

    def base_notes(self, n: int) -> Dict[str, Any]:
        if self.population_kind != PopulationKind.WORDS:
            return {}
        notes: Dict[str, Any] = {'classes': len(self.word_specs(n))}
        skipped = self.skipped_specs(n)
        if skipped:
            notes['skipped_classes'] = skipped
        return notes

    # ==================== Execution ====================

    @abstractmethod
    def run_range(self, n: int, start: int, stop: int) -> CheckOutcome:
        """
        Run the check on the elements with enumeration index in [start, stop).

        Returns:
            CheckOutcome whose counterexample is the first failure in the range
        """
        pass

    def run(self, n: int) -> CheckOutcome:
        return self.run_range(n, 0, self.population_size(n))


class ElementCheck(BaseCheck):
    """A property of single elements; any index range can be checked on its own."""

    @abstractmethod
    def check(self, element) -> Optional[Dict[str, Any]]:
        """
        Returns:
            None when the property holds, otherwise the observed values
        """
        pass

    def run_range(self, n: int, start: int, stop: int) -> CheckOutcome:
        notes = self.base_notes(n)
        for index, element in enumerate(itertools.islice(self.elements(n), start, stop), start=start):
            try:
                failure = self.check(element)
            except MahoniaException as e:
                failure = {'error': str(e)}
            if failure is not None:
                return CheckOutcome(
                    population=stop - start,
                    counterexample={**describe(element), **failure},
                    index=index,
                    notes=notes
                )
        return CheckOutcome(population=stop - start, notes=notes)


class PopulationCheck(BaseCheck):
    """A property of the whole population (bijectivity, distributions, counts)."""

    partitionable = False

    @abstractmethod
    def evaluate(self, n: int) -> CheckOutcome:
        pass

    def run_range(self, n: int, start: int, stop: int) -> CheckOutcome:
        # Population checks always see everything
        return self.evaluate(n)


class CheckRegistry:
    """
    Registry for managing available checks.
    """

    _checks: Dict[str, Type[BaseCheck]] = {}

    @classmethod
    def register(cls, check_class: Type[BaseCheck]):
        """Register a check class."""
        cls._checks[check_class.name] = check_class
        return check_class

    @classmethod
    def get(cls, name: str) -> Optional[Type[BaseCheck]]:
        return cls._checks.get(name)

    @classmethod
    def get_all(cls) -> Dict[str, Type[BaseCheck]]:
        return cls._checks.copy()

    @classmethod
    def get_by_suite(cls, suite: CheckSuite) -> List[Type[BaseCheck]]:
        return [c for c in cls._checks.values() if c.suite == suite]

    @classmethod
    def create_instance(cls, name: str, context: Dict[str, Any] = None) -> Optional[BaseCheck]:
        """Create a check instance by name."""
        check_class = cls.get(name)
        if check_class:
            return check_class(context)
        return None
