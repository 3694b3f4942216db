"""
Distribution Service - coefficient tables of a statistic's generating
polynomial over a finite population.
"""
from dataclasses import dataclass
from typing import Any, Dict, Iterable, Sequence, Tuple, Union

from apps.core.exceptions import DomainMismatchError
from apps.stats.services.registry import Statistic, StatisticKind, StatisticRegistry


@dataclass(frozen=True)
class DistributionTable:
    """
    coefficients[v] = number of elements whose statistic equals v.

    The coefficients always sum to the population size.
    """
    stat_name: str
    coefficients: Tuple[int, ...]
    population: int

    def rows(self) -> Iterable[Tuple[int, int]]:
        return enumerate(self.coefficients)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'stat': self.stat_name,
            'coefficients': list(self.coefficients),
            'population': self.population,
        }


def distribution(stat: Union[str, Statistic], population: Iterable[Sequence[int]]) -> DistributionTable:
    """
    Tabulate a scalar statistic over a population of words or permutations.

    Args:
        stat: Statistic name (as registered) or Statistic
        population: Nonempty iterable of words/permutations

    Returns:
        DistributionTable with exact counts
    """
    statistic = StatisticRegistry.require(stat) if isinstance(stat, str) else stat
    if statistic.kind != StatisticKind.SCALAR:
        raise DomainMismatchError(f"statistic '{statistic.name}' is not integer-valued", token=statistic.name)

    counts: Dict[int, int] = {}
    size = 0
    for word in population:
        value = statistic.func(word)
        counts[value] = counts.get(value, 0) + 1
        size += 1

    if size == 0:
        raise DomainMismatchError("cannot tabulate an empty population")

    top = max(counts)
    return DistributionTable(
        stat_name=statistic.name,
        coefficients=tuple(counts.get(value, 0) for value in range(top + 1)),
        population=size
    )
