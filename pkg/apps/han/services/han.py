"""
Han Service - Han's bijection H on permutations, by its recursive
definition and as I^{-1} o M, with the iteration traces of both columns of
the worked example table.
"""
from dataclasses import dataclass
from typing import List

from apps.codes.services.codes import (
    cyclic_major_decode,
    cyclic_major_encode,
    lehmer_decode,
    lehmer_encode,
)
from apps.core.exceptions import DomainMismatchError
from apps.permutations.domain import Code, Permutation
from apps.han.services.transforms import c_lower_inv, c_upper, split_last


def last(sigma: Permutation) -> int:
    """L(sigma) = sigma_n."""
    if sigma.n == 0:
        raise DomainMismatchError("the empty permutation has no last value")
    return sigma.values[-1]


def reduce_c(sigma: Permutation) -> Permutation:
    """The reduction C(sigma) = C^{sigma_n}(sigma_1 ... sigma_{n-1}) in S_{n-1}."""
    return c_upper(last(sigma), split_last(sigma))


# ==================== H ====================

def han_h(sigma: Permutation) -> Permutation:
    """
    H(sigma) = C_{sigma_n}^{-1}(H(C^{sigma_n}(sigma'))) . sigma_n, with
    H of the empty permutation empty (so H(1) = 1).

    This is the recursion oracle; `han_h_via_codes` is the production path.
    """
    if sigma.n == 0:
        return sigma
    x = last(sigma)
    inner = han_h(reduce_c(sigma))
    return Permutation(c_lower_inv(x, inner).values + (x,))


def han_h_via_codes(sigma: Permutation) -> Permutation:
    """H = I^{-1} o M."""
    return lehmer_decode(cyclic_major_encode(sigma))


def han_h_inverse(sigma: Permutation) -> Permutation:
    """H^{-1} = M^{-1} o I."""
    return cyclic_major_decode(lehmer_encode(sigma))


# ==================== Traces ====================

@dataclass(frozen=True)
class TraceRow:
    """One step of the reduction: C^j(sigma), its last value, and s_{n-j} = (n-j) - last."""
    j: int
    reduced: Permutation
    last: int
    s_entry: int

    @property
    def position(self) -> int:
        """The index i = n - j of the code entry this row determines."""
        return self.reduced.n


@dataclass(frozen=True)
class ConstructionRow:
    """One step of building H: image = C_x^{-1}(inner) . x, where x = L(C^j(sigma))."""
    j: int
    reduced: Permutation
    x: int
    inner: Permutation
    image: Permutation


def reductions(sigma: Permutation) -> List[Permutation]:
    """[C^0(sigma), C^1(sigma), ..., C^{n-1}(sigma)]."""
    chain = []
    current = sigma
    while current.n > 0:
        chain.append(current)
        current = reduce_c(current)
    return chain


def c_iteration_trace(sigma: Permutation) -> List[TraceRow]:
    rows = []
    for j, reduced in enumerate(reductions(sigma)):
        value = last(reduced)
        rows.append(TraceRow(j=j, reduced=reduced, last=value, s_entry=reduced.n - value))
    return rows


def cyclic_major_via_trace(sigma: Permutation) -> Code:
    """M(sigma) read off the trace: s_i = i - L(C^{n-i}(sigma))."""
    rows = c_iteration_trace(sigma)
    return Code(tuple(row.s_entry for row in reversed(rows)))


def l_sequence(sigma: Permutation) -> List[int]:
    """L(C^{n-1}(sigma)), ..., L(C^0(sigma)), bottom-up as in the worked example."""
    return [row.last for row in reversed(c_iteration_trace(sigma))]


def han_construction_trace(sigma: Permutation) -> List[ConstructionRow]:
    """
    The right-hand column of the worked example: rows j = 0..n-1, each
    building H(C^j(sigma)) from H(C^{j+1}(sigma)).
    """
    chain = reductions(sigma)
    images = [Permutation.empty()] * (len(chain) + 1)
    for j in range(len(chain) - 1, -1, -1):
        x = last(chain[j])
        images[j] = Permutation(c_lower_inv(x, images[j + 1]).values + (x,))
    return [
        ConstructionRow(j=j, reduced=chain[j], x=last(chain[j]), inner=images[j + 1], image=images[j])
        for j in range(len(chain))
    ]
