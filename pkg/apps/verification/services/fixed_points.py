"""
Fixed points of H: built constructively from Lehmer codes with
t_i in {0, i-1}, and the Phi-fixed permutations H moves.
"""
import itertools
import logging
from typing import List, Optional

from apps.codes.services.codes import lehmer_decode
from apps.core.exceptions import InvariantViolation
from apps.foata.services.foata import is_foata_fixed_point, is_strong_fixed_point
from apps.han.services.han import han_h_via_codes
from apps.permutations.domain import Code, Permutation
from apps.verification.services.enumeration import check_n, enumerate_sn

logger = logging.getLogger(__name__)


def fixed_points_of_h(n: int, cap: Optional[int] = None) -> List[Permutation]:
    """
    All 2^{n-1} fixed points of H, in lexicographic order.

    Each decoded permutation is checked to be H-fixed and a strong fixed
    point before it is returned.

    Args:
        n: Size
        cap: Optional override of MAHONIA_MAX_N

    Returns:
        Sorted list of permutations
    """
    check_n(n, cap)
    choices = [sorted({0, i - 1}) for i in range(1, n + 1)]
    points = []
    for entries in itertools.product(*choices):
        sigma = lehmer_decode(Code(entries))
        if han_h_via_codes(sigma) != sigma or not is_strong_fixed_point(sigma):
            raise InvariantViolation(f"code {Code(entries)} decodes to {sigma}, which is not a fixed point of H")
        points.append(sigma)
    logger.debug(f"Built {len(points)} fixed points of H for n={n}")
    return sorted(points, key=lambda sigma: sigma.values)


def foata_only_fixed_point(n: int, cap: Optional[int] = None) -> Optional[Permutation]:
    """The least sigma in S_n with Phi(sigma) = sigma but H(sigma) != sigma, if any."""
    for sigma in enumerate_sn(n, cap):
        if is_foata_fixed_point(sigma) and han_h_via_codes(sigma) != sigma:
            return sigma
    return None
