"""
Foata checks: Phi sends maj to inv on S_n and on R(X), is a bijection, keeps
the last letter, and factors through the partial maps.
"""
from math import factorial
from typing import Any, Dict, Optional

from apps.foata.services import (
    compose_partial_foata,
    foata_phi,
    foata_phi_recursive,
    is_foata_fixed_point,
    is_partial_foata_fixed_point,
    is_strong_fixed_point,
)
from apps.stats.services import inv, maj
from apps.verification.services.enumeration import enumerate_rearrangements
from .base import CheckOutcome, CheckRegistry, CheckSuite, ElementCheck, PopulationCheck, PopulationKind


def _phi_failure(element) -> Optional[Dict[str, Any]]:
    image = foata_phi(element)
    if inv(image) != maj(element) or image[-1] != element[-1] or sorted(image) != sorted(element):
        return {'image': str(image), 'maj': maj(element), 'inv_of_image': inv(image)}
    return None


@CheckRegistry.register
class PhiMajToInvCheck(ElementCheck):
    name = "phi_maps_maj_to_inv"
    description = "inv(Phi(sigma)) = maj(sigma), last letter kept, on S_n"
    suite = CheckSuite.FOATA

    def check(self, element) -> Optional[Dict[str, Any]]:
        return _phi_failure(element)


@CheckRegistry.register
class PhiMajToInvWordsCheck(ElementCheck):
    name = "phi_maps_maj_to_inv_words"
    description = "inv(Phi(w)) = maj(w), last letter and content kept, on the R(X) family"
    suite = CheckSuite.FOATA
    population_kind = PopulationKind.WORDS

    def check(self, element) -> Optional[Dict[str, Any]]:
        return _phi_failure(element)


@CheckRegistry.register
class PhiRecursionAgreesCheck(ElementCheck):
    name = "phi_recursion_agrees"
    description = "the iterative fold agrees with the recursive definition"
    suite = CheckSuite.FOATA
    population_kind = PopulationKind.WORDS

    def check(self, element) -> Optional[Dict[str, Any]]:
        folded, recursive = foata_phi(element), foata_phi_recursive(element)
        if folded != recursive:
            return {'iterative': str(folded), 'recursive': str(recursive)}
        return None


@CheckRegistry.register
class PhiBijectiveCheck(PopulationCheck):
    name = "phi_bijective"
    description = "Phi is a bijection of S_n"
    suite = CheckSuite.FOATA

    def evaluate(self, n: int) -> CheckOutcome:
        size = self.population_size(n)
        seen = {}
        for index, sigma in enumerate(self.elements(n)):
            image = foata_phi(sigma)
            if image in seen:
                return CheckOutcome(
                    population=size,
                    counterexample={'input': str(sigma), 'collides_with': str(seen[image]), 'image': str(image)},
                    index=index
                )
            seen[image] = sigma
        if len(seen) != factorial(n):
            return CheckOutcome(population=size, counterexample={'error': f"{len(seen)} images for {factorial(n)} permutations"})
        return CheckOutcome(population=size)


@CheckRegistry.register
class PhiBijectiveWordsCheck(PopulationCheck):
    name = "phi_bijective_words"
    description = "Phi permutes every rearrangement class of the R(X) family"
    suite = CheckSuite.FOATA
    population_kind = PopulationKind.WORDS

    def evaluate(self, n: int) -> CheckOutcome:
        size = self.population_size(n)
        notes = self.base_notes(n)
        index = 0
        for spec in self.word_specs(n):
            seen = {}
            for word in enumerate_rearrangements(spec, self.max_class_size):
                image = foata_phi(word)
                if image in seen:
                    return CheckOutcome(
                        population=size,
                        counterexample={
                            'input': str(word),
                            'spec': spec.render(),
                            'collides_with': str(seen[image]),
                            'image': str(image),
                        },
                        index=index,
                        notes=notes
                    )
                seen[image] = word
                index += 1
        return CheckOutcome(population=size, notes=notes)


@CheckRegistry.register
class PartialFoataCompositionCheck(ElementCheck):
    name = "partial_foata_composition"
    description = "phi_n o ... o phi_1 = Phi on S_n"
    suite = CheckSuite.FOATA

    def check(self, element) -> Optional[Dict[str, Any]]:
        composed, direct = compose_partial_foata(element), foata_phi(element)
        if composed != direct:
            return {'composed': str(composed), 'phi': str(direct)}
        return None


@CheckRegistry.register
class StrongFixedPointCriterionCheck(ElementCheck):
    name = "strong_fixed_point_criterion"
    description = "every phi_k fixes sigma iff all prefixes are consecutive; such sigma are Phi-fixed"
    suite = CheckSuite.FOATA

    def check(self, element) -> Optional[Dict[str, Any]]:
        by_maps, by_prefixes = is_partial_foata_fixed_point(element), is_strong_fixed_point(element)
        if by_maps != by_prefixes or (by_prefixes and not is_foata_fixed_point(element)):
            return {
                'fixed_by_partial_maps': by_maps,
                'consecutive_prefixes': by_prefixes,
                'phi_fixed': is_foata_fixed_point(element),
            }
        return None
