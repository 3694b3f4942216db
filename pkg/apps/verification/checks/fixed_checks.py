"""
Fixed-point checks: H(sigma) = sigma iff all prefixes are consecutive iff
every t_i is 0 or i-1, and there are exactly 2^{n-1} such sigma.
"""
from typing import Any, Dict, Optional

from apps.foata.services import is_foata_fixed_point, is_strong_fixed_point
from apps.han.services import han_h
from apps.stats.services import t_vector
from apps.verification.services.fixed_points import fixed_points_of_h, foata_only_fixed_point
from .base import CheckOutcome, CheckRegistry, CheckSuite, ElementCheck, PopulationCheck


def _extreme_code(element) -> bool:
    return all(entry in (0, i - 1) for i, entry in enumerate(t_vector(element), start=1))


@CheckRegistry.register
class FixedPointTheoremCheck(ElementCheck):
    name = "fixed_point_theorem"
    description = "H-fixed, strong fixed point and t_i in {0, i-1} agree; H-fixed implies Phi-fixed"
    suite = CheckSuite.FIXED

    def check(self, element) -> Optional[Dict[str, Any]]:
        h_fixed = han_h(element) == element
        strong = is_strong_fixed_point(element)
        extreme = _extreme_code(element)
        if not h_fixed == strong == extreme or (h_fixed and not is_foata_fixed_point(element)):
            return {
                'h_fixed': h_fixed,
                'strong_fixed_point': strong,
                'extreme_lehmer_code': extreme,
                'phi_fixed': is_foata_fixed_point(element),
            }
        return None


@CheckRegistry.register
class FixedPointCountCheck(PopulationCheck):
    name = "fixed_point_count"
    description = "the H-fixed points are exactly the 2^{n-1} constructed ones"
    suite = CheckSuite.FIXED

    def evaluate(self, n: int) -> CheckOutcome:
        size = self.population_size(n)
        found = [sigma for sigma in self.elements(n) if han_h(sigma) == sigma]
        built = fixed_points_of_h(n, self.max_n)
        witness = foata_only_fixed_point(n, self.max_n)
        notes = {
            'fixed_points': len(found),
            'foata_only_witness': str(witness) if witness is not None else None,
        }
        expected = 2 ** (n - 1) if n else 1
        if found != built or len(found) != expected:
            return CheckOutcome(
                population=size,
                counterexample={
                    'found': [str(sigma) for sigma in found],
                    'constructed': [str(sigma) for sigma in built],
                    'expected_count': expected,
                },
                notes=notes
            )
        return CheckOutcome(population=size, notes=notes)
