"""
Statistic Registry - named statistics shared by the CLI, the API and the
distribution tables.
"""
from dataclasses import dataclass
from enum import Enum
from typing import Any, Callable, Dict, List, Optional, Sequence

from apps.core.exceptions import DomainMismatchError
from apps.stats.services.statistics import (
    descent_set,
    des,
    inv,
    maj,
    s_vector,
    t_vector,
    z_statistic,
)


class StatisticKind(Enum):
    """Shape of a statistic's value."""
    SCALAR = "scalar"
    VECTOR = "vector"
    SET = "set"


@dataclass(frozen=True)
class Statistic:
    """A named statistic on words."""
    name: str
    description: str
    func: Callable[[Sequence[int]], Any]
    kind: StatisticKind = StatisticKind.SCALAR
    mahonian: bool = False

    def evaluate(self, word: Sequence[int]) -> Any:
        """Evaluate and convert to plain ints/lists."""
        value = self.func(word)
        if self.kind == StatisticKind.VECTOR:
            return list(value)
        if self.kind == StatisticKind.SET:
            return sorted(value)
        return value


class StatisticRegistry:
    """
    Registry for the available statistics.
    """

    _statistics: Dict[str, Statistic] = {}

    @classmethod
    def register(cls, statistic: Statistic) -> Statistic:
        cls._statistics[statistic.name] = statistic
        return statistic

    @classmethod
    def get(cls, name: str) -> Optional[Statistic]:
        return cls._statistics.get(name)

    @classmethod
    def require(cls, name: str) -> Statistic:
        statistic = cls.get(name)
        if statistic is None:
            raise DomainMismatchError(
                f"unknown statistic '{name}'; expected one of {', '.join(cls.names())}",
                token=name
            )
        return statistic

    @classmethod
    def names(cls, kind: StatisticKind = None) -> List[str]:
        return [
            name for name, statistic in cls._statistics.items()
            if kind is None or statistic.kind == kind
        ]

    @classmethod
    def mahonian(cls) -> List[Statistic]:
        return [s for s in cls._statistics.values() if s.mahonian]


StatisticRegistry.register(Statistic('maj', 'major index', maj, mahonian=True))
StatisticRegistry.register(Statistic('inv', 'inversion number', inv, mahonian=True))
StatisticRegistry.register(Statistic('z', 'Z-statistic', z_statistic, mahonian=True))
StatisticRegistry.register(Statistic('des', 'number of descents', des))
StatisticRegistry.register(Statistic('desset', 'descent set', descent_set, StatisticKind.SET))
StatisticRegistry.register(Statistic('tvec', 't-vector', t_vector, StatisticKind.VECTOR))
StatisticRegistry.register(Statistic('svec', 's-vector', s_vector, StatisticKind.VECTOR))
