"""
Mahonian checks: maj, inv and Z share one distribution, equal to the
q-factorial on S_n and to the q-multinomial on R(X).
"""
from typing import Dict, List, Optional, Sequence

from apps.foata.services import foata_phi
from apps.stats.services import StatisticRegistry, inv, maj
from apps.verification.services.distribution import DistributionTable, distribution
from apps.verification.services.enumeration import enumerate_rearrangements
from apps.verification.services.polynomial import q_factorial, q_multinomial
from .base import CheckOutcome, CheckRegistry, CheckSuite, PopulationCheck, PopulationKind, describe


def mahonian_tables(population: Sequence) -> Dict[str, DistributionTable]:
    """One distribution table per Mahonian statistic, in registry order."""
    return {stat.name: distribution(stat, population) for stat in StatisticRegistry.mahonian()}


def mahonian_outcome(population: List, expected: Optional[List[int]] = None, offset: int = 0) -> CheckOutcome:
    """
    Compare the Mahonian tables of a population with the expected
    coefficients, then check maj(w) = inv(Phi(w)) element by element.

    Args:
        population: All elements of S_n or of one class R(X)
        expected: Oracle coefficients; defaults to the maj table
        offset: Enumeration index of population[0]

    Returns:
        CheckOutcome whose notes carry the tables
    """
    tables = mahonian_tables(population)
    reference = list(expected) if expected is not None else list(tables['maj'].coefficients)
    notes = {
        'tables': {name: list(table.coefficients) for name, table in tables.items()},
        'expected': reference,
    }
    for name, table in tables.items():
        if list(table.coefficients) != reference:
            return CheckOutcome(
                population=len(population),
                counterexample={'stat': name, 'coefficients': list(table.coefficients), 'expected': reference},
                notes=notes
            )
    for index, word in enumerate(population, start=offset):
        image = foata_phi(word)
        if inv(image) != maj(word):
            return CheckOutcome(
                population=len(population),
                counterexample={**describe(word), 'maj': maj(word), 'inv_of_phi': inv(image)},
                index=index,
                notes=notes
            )
    return CheckOutcome(population=len(population), notes=notes)


@CheckRegistry.register
class MahonianPermutationsCheck(PopulationCheck):
    name = "mahonian_permutations"
    description = "maj, inv and Z distribute as [n]_q! over S_n"
    suite = CheckSuite.MAHONIAN

    def evaluate(self, n: int) -> CheckOutcome:
        return mahonian_outcome(list(self.elements(n)), q_factorial(n))


@CheckRegistry.register
class MahonianWordsCheck(PopulationCheck):
    name = "mahonian_words"
    description = "maj, inv and Z distribute as the q-multinomial over every class of the R(X) family"
    suite = CheckSuite.MAHONIAN
    population_kind = PopulationKind.WORDS

    def evaluate(self, n: int) -> CheckOutcome:
        notes = self.base_notes(n)
        size, offset = self.population_size(n), 0
        for spec in self.word_specs(n):
            words = list(enumerate_rearrangements(spec, self.max_class_size))
            outcome = mahonian_outcome(words, q_multinomial(spec.m), offset)
            if not outcome.passed:
                counterexample = {'spec': spec.render(), **outcome.counterexample}
                return CheckOutcome(population=size, counterexample=counterexample, index=outcome.index, notes=notes)
            offset += len(words)
        return CheckOutcome(population=size, notes=notes)
