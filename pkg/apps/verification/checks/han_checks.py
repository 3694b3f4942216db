"""
Han checks: H = I^{-1} o M, maj -> inv, bijectivity, complement
commutation, the trace identities and the C transforms.
"""
from math import factorial
from typing import Any, Dict, Optional

from apps.codes.services import code_complement, cyclic_major_encode, lehmer_encode
from apps.han.services import (
    c_lower,
    c_lower_inv,
    c_upper,
    c_upper_inv,
    cyclic_major_via_trace,
    han_construction_trace,
    han_h,
    han_h_inverse,
    han_h_via_codes,
    reductions,
    split_last,
)
from apps.permutations.domain import Permutation, complement
from apps.stats.services import inv, maj
from .base import CheckOutcome, CheckRegistry, CheckSuite, ElementCheck, PopulationCheck


@CheckRegistry.register
class HEqualsIMCheck(ElementCheck):
    name = "h_equals_im"
    description = "the recursive H agrees with I^{-1} o M"
    suite = CheckSuite.HAN

    def check(self, element) -> Optional[Dict[str, Any]]:
        recursive, composed = han_h(element), han_h_via_codes(element)
        if recursive != composed:
            return {
                'han_h': str(recursive),
                'lehmer_decode_of_cyclic_major': str(composed),
                'cyclic_major': str(cyclic_major_encode(element)),
            }
        return None


@CheckRegistry.register
class HMajToInvCheck(ElementCheck):
    name = "h_maps_maj_to_inv"
    description = "inv(H(sigma)) = maj(sigma)"
    suite = CheckSuite.HAN

    def check(self, element) -> Optional[Dict[str, Any]]:
        image = han_h(element)
        if inv(image) != maj(element):
            return {'image': str(image), 'maj': maj(element), 'inv_of_image': inv(image)}
        return None


@CheckRegistry.register
class HPreservesLastCheck(ElementCheck):
    name = "h_preserves_last"
    description = "H keeps the last value"
    suite = CheckSuite.HAN

    def check(self, element) -> Optional[Dict[str, Any]]:
        image = han_h(element)
        if image[-1] != element[-1]:
            return {'image': str(image)}
        return None


@CheckRegistry.register
class HInverseCheck(ElementCheck):
    name = "h_inverse"
    description = "M^{-1} o I undoes H on both sides"
    suite = CheckSuite.HAN

    def check(self, element) -> Optional[Dict[str, Any]]:
        image, preimage = han_h_via_codes(element), han_h_inverse(element)
        if han_h_inverse(image) != element or han_h_via_codes(preimage) != element:
            return {'image': str(image), 'preimage': str(preimage)}
        return None


@CheckRegistry.register
class HBijectiveCheck(PopulationCheck):
    name = "h_bijective"
    description = "H is a bijection of S_n"
    suite = CheckSuite.HAN

    def evaluate(self, n: int) -> CheckOutcome:
        size = self.population_size(n)
        seen: Dict[Permutation, Permutation] = {}
        for index, sigma in enumerate(self.elements(n)):
            image = han_h(sigma)
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
class ComplementCommutationCheck(ElementCheck):
    name = "complement_commutation"
    description = "H(c sigma) = c H(sigma), M(c sigma) = c M(sigma) and I(c sigma) = c I(sigma)"
    suite = CheckSuite.HAN

    def check(self, element) -> Optional[Dict[str, Any]]:
        flipped = complement(element)
        left, right = han_h(flipped), complement(han_h(element))
        if left != right:
            return {'map': 'H', 'of_complement': str(left), 'complement_of': str(right)}
        for label, encoder in (('M', cyclic_major_encode), ('I', lehmer_encode)):
            code_left, code_right = encoder(flipped), code_complement(encoder(element))
            if code_left != code_right:
                return {'map': label, 'of_complement': str(code_left), 'complement_of': str(code_right)}
        return None


@CheckRegistry.register
class TraceIdentitiesCheck(ElementCheck):
    name = "trace_identities"
    description = "s_i = i - L(C^{n-i}(sigma)), M(C^{n-i}(sigma)) = (s_1, ..., s_i) and the construction trace ends at H(sigma)"
    suite = CheckSuite.HAN

    def check(self, element) -> Optional[Dict[str, Any]]:
        via_trace, direct = cyclic_major_via_trace(element), cyclic_major_encode(element)
        if via_trace != direct:
            return {'via_trace': str(via_trace), 'cyclic_major': str(direct)}
        for i, reduced in enumerate(reversed(reductions(element)), start=1):
            prefix = cyclic_major_encode(reduced)
            if prefix.entries != direct.entries[:i]:
                return {'i': i, 'reduced': str(reduced), 'prefix_code': str(prefix)}
        built = han_construction_trace(element)[0].image
        if built != han_h_via_codes(element):
            return {'construction_image': str(built), 'han_h': str(han_h_via_codes(element))}
        return None


@CheckRegistry.register
class CTransformsRoundTripCheck(ElementCheck):
    name = "c_transforms_round_trip"
    description = "C^x and C_x are inverted by their inverses on (sigma_n, sigma')"
    suite = CheckSuite.HAN

    def check(self, element) -> Optional[Dict[str, Any]]:
        x, gapped = element[-1], split_last(element)
        upper = c_upper_inv(x, c_upper(x, gapped))
        lower = c_lower_inv(x, c_lower(x, gapped))
        if upper != gapped or lower != gapped:
            return {'x': x, 'upper_round_trip': str(tuple(upper)), 'lower_round_trip': str(tuple(lower))}
        return None
