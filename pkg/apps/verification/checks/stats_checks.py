"""
Statistic checks: vector sums, E_n bounds, the Lehmer descent criterion and
the Fenwick implementations against the naive scans.
"""
from typing import Any, Dict, Optional

from apps.core.exceptions import CodeBoundError
from apps.stats.services import (
    descent_set,
    inv,
    inv_fast,
    maj,
    s_vector,
    s_vector_fast,
    t_vector,
    t_vector_fast,
    z_statistic,
)
from .base import CheckRegistry, CheckSuite, ElementCheck, PopulationKind


@CheckRegistry.register
class TSumEqualsInvCheck(ElementCheck):
    name = "t_sum_equals_inv"
    description = "sum of the t-vector equals inv, on every word of the R(X) family"
    suite = CheckSuite.STATS
    population_kind = PopulationKind.WORDS

    def check(self, element) -> Optional[Dict[str, Any]]:
        total, expected = t_vector(element).total(), inv(element)
        if total != expected:
            return {'t_sum': total, 'inv': expected}
        return None


@CheckRegistry.register
class SSumEqualsMajCheck(ElementCheck):
    name = "s_sum_equals_maj"
    description = "sum of the s-vector equals maj on S_n"
    suite = CheckSuite.STATS

    def check(self, element) -> Optional[Dict[str, Any]]:
        total, expected = s_vector(element).total(), maj(element)
        if total != expected:
            return {'s_sum': total, 'maj': expected}
        return None


@CheckRegistry.register
class ZEqualsInvCheck(ElementCheck):
    name = "z_equals_inv"
    description = "Z coincides with inv on permutations"
    suite = CheckSuite.STATS

    def check(self, element) -> Optional[Dict[str, Any]]:
        z, expected = z_statistic(element), inv(element)
        if z != expected:
            return {'z': z, 'inv': expected}
        return None


@CheckRegistry.register
class VectorsInCodeSpaceCheck(ElementCheck):
    name = "vectors_in_code_space"
    description = "t- and s-vectors of every word satisfy 0 <= a_i <= i-1"
    suite = CheckSuite.STATS
    population_kind = PopulationKind.WORDS

    def check(self, element) -> Optional[Dict[str, Any]]:
        try:
            t_vector(element)
            s_vector(element)
        except CodeBoundError as e:
            return {'bound_violation': str(e)}
        return None


@CheckRegistry.register
class LehmerDescentCriterionCheck(ElementCheck):
    name = "lehmer_descent_criterion"
    description = "i is a descent iff t_i < t_{i+1}"
    suite = CheckSuite.STATS

    def check(self, element) -> Optional[Dict[str, Any]]:
        t = t_vector(element)
        descents = descent_set(element)
        for i in range(1, len(t)):
            if (i in descents) != (t[i - 1] < t[i]):
                return {'position': i, 't': str(t), 'descents': sorted(descents)}
        return None


@CheckRegistry.register
class FenwickMatchesNaiveCheck(ElementCheck):
    name = "fenwick_matches_naive"
    description = "Fenwick-tree vectors and inv equal the quadratic scans"
    suite = CheckSuite.STATS
    population_kind = PopulationKind.WORDS

    def check(self, element) -> Optional[Dict[str, Any]]:
        pairs = {
            'tvec': (t_vector_fast(element), t_vector(element)),
            'svec': (s_vector_fast(element), s_vector(element)),
            'inv': (inv_fast(element), inv(element)),
        }
        for label, (fast, naive) in pairs.items():
            if fast != naive:
                return {'statistic': label, 'fast': str(fast), 'naive': str(naive)}
        return None
