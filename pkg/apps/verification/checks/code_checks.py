"""
Code checks: round trips, bijectivity onto E_n, the t -> s transform and the
complement identities.
"""
from math import factorial
from typing import Any, Callable, Dict, Optional

from apps.codes.services import (
    code_complement,
    cyclic_major_decode,
    cyclic_major_encode,
    lehmer_decode,
    lehmer_encode,
    s_to_t,
    t_to_s,
)
from apps.permutations.domain import Code, Permutation, complement
from apps.stats.services import inv, maj
from .base import CheckOutcome, CheckRegistry, CheckSuite, ElementCheck, PopulationCheck, PopulationKind


@CheckRegistry.register
class LehmerRoundTripCheck(ElementCheck):
    name = "lehmer_round_trip"
    description = "I^{-1}(I(sigma)) = sigma"
    suite = CheckSuite.CODES

    def check(self, element) -> Optional[Dict[str, Any]]:
        code = lehmer_encode(element)
        decoded = lehmer_decode(code)
        if decoded != element:
            return {'code': str(code), 'decoded': str(decoded)}
        return None


@CheckRegistry.register
class CyclicMajorRoundTripCheck(ElementCheck):
    name = "cyclic_major_round_trip"
    description = "M^{-1}(M(sigma)) = sigma"
    suite = CheckSuite.CODES

    def check(self, element) -> Optional[Dict[str, Any]]:
        code = cyclic_major_encode(element)
        decoded = cyclic_major_decode(code)
        if decoded != element:
            return {'code': str(code), 'decoded': str(decoded)}
        return None


class _EncoderBijectivityCheck(PopulationCheck):
    """An encoder S_n -> E_n hits n! distinct codes."""
    suite = CheckSuite.CODES
    encoder: Callable[[Permutation], Code] = None

    def evaluate(self, n: int) -> CheckOutcome:
        size = self.population_size(n)
        seen: Dict[Code, Permutation] = {}
        for index, sigma in enumerate(self.elements(n)):
            code = type(self).encoder(sigma)
            if code in seen:
                return CheckOutcome(
                    population=size,
                    counterexample={'input': str(sigma), 'collides_with': str(seen[code]), 'code': str(code)},
                    index=index
                )
            seen[code] = sigma
        if len(seen) != factorial(n):
            return CheckOutcome(population=size, counterexample={'error': f"{len(seen)} codes for {factorial(n)} permutations"})
        return CheckOutcome(population=size, notes={'codes': len(seen)})


@CheckRegistry.register
class LehmerBijectiveCheck(_EncoderBijectivityCheck):
    name = "lehmer_bijective"
    description = "I is a bijection S_n -> E_n"
    encoder = lehmer_encode


@CheckRegistry.register
class CyclicMajorBijectiveCheck(_EncoderBijectivityCheck):
    name = "cyclic_major_bijective"
    description = "M is a bijection S_n -> E_n"
    encoder = cyclic_major_encode


@CheckRegistry.register
class InversionToCyclicMajorCheck(ElementCheck):
    name = "inversion_to_cyclic_major"
    description = "t_to_s(I(sigma)) = M(sigma) and s_to_t(M(sigma)) = I(sigma)"
    suite = CheckSuite.CODES

    def check(self, element) -> Optional[Dict[str, Any]]:
        lehmer, cyclic = lehmer_encode(element), cyclic_major_encode(element)
        forward, backward = t_to_s(lehmer), s_to_t(cyclic)
        if forward != cyclic or backward != lehmer:
            return {
                'lehmer': str(lehmer),
                'cyclic_major': str(cyclic),
                't_to_s': str(forward),
                's_to_t': str(backward),
            }
        return None


@CheckRegistry.register
class CodeSumsCheck(ElementCheck):
    name = "code_sums"
    description = "sum I = inv, sum M = maj and s_n = n - sigma_n"
    suite = CheckSuite.CODES

    def check(self, element) -> Optional[Dict[str, Any]]:
        lehmer, cyclic = lehmer_encode(element), cyclic_major_encode(element)
        n = element.n
        if lehmer.total() != inv(element) or cyclic.total() != maj(element) or cyclic[n - 1] != n - element[n - 1]:
            return {
                'lehmer': str(lehmer),
                'cyclic_major': str(cyclic),
                'inv': inv(element),
                'maj': maj(element),
            }
        return None


@CheckRegistry.register
class CodeComplementIdentitiesCheck(ElementCheck):
    name = "code_complement_identities"
    description = "I(c sigma) = c(I(sigma)) and M(c sigma) = c(M(sigma))"
    suite = CheckSuite.CODES

    def check(self, element) -> Optional[Dict[str, Any]]:
        flipped = complement(element)
        for label, encoder in (('lehmer', lehmer_encode), ('cyclic_major', cyclic_major_encode)):
            left, right = encoder(flipped), code_complement(encoder(element))
            if left != right:
                return {'code': label, 'of_complement': str(left), 'complement_of': str(right)}
        return None


@CheckRegistry.register
class ComplementInvolutionCheck(ElementCheck):
    name = "complement_involution"
    description = "c(c(sigma)) = sigma"
    suite = CheckSuite.CODES

    def check(self, element) -> Optional[Dict[str, Any]]:
        twice = complement(complement(element))
        if twice != element:
            return {'twice': str(twice)}
        return None


@CheckRegistry.register
class TransformRoundTripCheck(ElementCheck):
    name = "transform_round_trip"
    description = "t_to_s and s_to_t are mutually inverse on E_n"
    suite = CheckSuite.CODES
    population_kind = PopulationKind.CODES

    def check(self, element) -> Optional[Dict[str, Any]]:
        there, back = t_to_s(element), s_to_t(element)
        if s_to_t(there) != element or t_to_s(back) != element:
            return {'t_to_s': str(there), 's_to_t': str(back)}
        return None


@CheckRegistry.register
class CodeComplementInvolutionCheck(ElementCheck):
    name = "code_complement_involution"
    description = "code complement is an involution on E_n"
    suite = CheckSuite.CODES
    population_kind = PopulationKind.CODES

    def check(self, element) -> Optional[Dict[str, Any]]:
        twice = code_complement(code_complement(element))
        if twice != element:
            return {'twice': str(twice)}
        return None
