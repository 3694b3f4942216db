"""
The transforms C^x (cyclic shift by x) and C_x (standardization) between
permutations of [n] \\ {x} and S_{n-1}, with their inverses.
"""
from apps.core.exceptions import DomainMismatchError, GapMismatchError
from apps.permutations.domain import GappedPermutation, Permutation


def _check_gap(x: int, sigma: GappedPermutation) -> None:
    if sigma.gap != x:
        raise GapMismatchError(f"permutation misses {sigma.gap}, not {x}", token=str(x))


def _check_pivot(x: int, n: int) -> None:
    if not 1 <= x <= n:
        raise DomainMismatchError(f"x = {x} is outside [1, {n}]", token=str(x))


def c_upper(x: int, sigma: GappedPermutation) -> Permutation:
    """C^x: tau_i = sigma_i - x (mod n), i.e. sigma_i - x + n if sigma_i < x, else sigma_i - x."""
    _check_gap(x, sigma)
    n = sigma.n
    return Permutation(tuple(
        value - x + n if value < x else value - x
        for value in sigma.values
    ))


def c_lower(x: int, sigma: GappedPermutation) -> Permutation:
    """C_x: standardization, sigma_i if sigma_i < x, else sigma_i - 1."""
    _check_gap(x, sigma)
    return Permutation(tuple(
        value if value < x else value - 1
        for value in sigma.values
    ))


def c_upper_inv(x: int, tau: Permutation) -> GappedPermutation:
    n = tau.n + 1
    _check_pivot(x, n)
    return GappedPermutation(
        tuple(value + x if value <= n - x else value + x - n for value in tau.values),
        gap=x
    )


def c_lower_inv(x: int, nu: Permutation) -> GappedPermutation:
    n = nu.n + 1
    _check_pivot(x, n)
    return GappedPermutation(
        tuple(value if value < x else value + 1 for value in nu.values),
        gap=x
    )


def split_last(sigma: Permutation) -> GappedPermutation:
    """sigma' = sigma_1 ... sigma_{n-1} as a permutation of [n] \\ {sigma_n}."""
    if sigma.n == 0:
        raise DomainMismatchError("the empty permutation has no last value")
    return GappedPermutation(sigma.values[:-1], gap=sigma.values[-1])
