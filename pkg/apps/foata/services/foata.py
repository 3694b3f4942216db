"""
Foata Service - x-factorizations, gamma_x, the second fundamental
transformation Phi, the partial Foata maps phi_k and strong fixed points.
"""
from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple, Union

from apps.core.exceptions import DomainMismatchError
from apps.permutations.domain import Permutation, Word


@dataclass(frozen=True)
class XFactorization:
    """
    w = v_1 b_1 ... v_p b_p with respect to the pivot x.

    If w_n <= x every b_i is <= x and every letter of every v_i is > x;
    otherwise every b_i is > x and every v_i letter is <= x. Letters equal to
    x always fall on the <= side.
    """
    x: int
    blocks: Tuple[Tuple[Tuple[int, ...], int], ...]

    def reconstruct(self) -> Tuple[int, ...]:
        letters = []
        for v, b in self.blocks:
            letters.extend(v)
            letters.append(b)
        return tuple(letters)

    def swapped(self) -> Tuple[int, ...]:
        """b_1 v_1 ... b_p v_p."""
        letters = []
        for v, b in self.blocks:
            letters.append(b)
            letters.extend(v)
        return tuple(letters)


def _rewrap(original: Sequence[int], letters: Iterable[int]):
    """Return letters with the same type (and spec) as the original."""
    letters = tuple(letters)
    if isinstance(original, Permutation):
        return Permutation(letters)
    if isinstance(original, Word):
        return Word(letters, original.spec)
    return letters


# ==================== gamma_x ====================

def x_factorize(word: Sequence[int], x: int) -> XFactorization:
    if len(word) == 0:
        raise DomainMismatchError("cannot factorize the empty word")
    low_blocks = word[-1] <= x
    blocks = []
    pending: List[int] = []
    for letter in word:
        if (letter <= x) == low_blocks:
            blocks.append((tuple(pending), letter))
            pending = []
        else:
            pending.append(letter)
    return XFactorization(x, tuple(blocks))


def _gamma_letters(x: int, letters: Sequence[int]) -> Tuple[int, ...]:
    if len(letters) == 0:
        return ()
    return x_factorize(letters, x).swapped()


def gamma(x: int, word: Sequence[int]):
    """gamma_x(v_1 b_1 ... v_p b_p) = b_1 v_1 ... b_p v_p; gamma_x of the empty word is empty."""
    return _rewrap(word, _gamma_letters(x, word))


# ==================== Phi ====================

def foata_phi(word: Sequence[int]):
    """
    Foata's second fundamental transformation, as a left-to-right fold:
    Phi(w_1 ... w_i) = gamma_{w_i}(Phi(w_1 ... w_{i-1})) . w_i.

    maj(w) = inv(Phi(w)); the last letter and the letter content are kept.
    """
    result: Tuple[int, ...] = ()
    for letter in word:
        result = _gamma_letters(letter, result) + (letter,)
    return _rewrap(word, result)


def foata_phi_recursive(word: Sequence[int]):
    """The recursive definition, kept as an oracle for `foata_phi`."""
    letters = tuple(word)
    if len(letters) <= 1:
        return _rewrap(word, letters)
    head = tuple(foata_phi_recursive(letters[:-1]))
    return _rewrap(word, _gamma_letters(letters[-1], head) + (letters[-1],))


# ==================== Partial maps ====================

def partial_foata(k: int, sigma: Permutation) -> Permutation:
    """phi_k(sigma) = gamma_{sigma_k}(sigma_1 ... sigma_{k-1}) . sigma_k ... sigma_n."""
    if not 1 <= k <= sigma.n:
        raise DomainMismatchError(f"k = {k} is outside [1, {sigma.n}]", token=str(k))
    values = sigma.values
    return Permutation(_gamma_letters(values[k - 1], values[:k - 1]) + values[k - 1:])


def compose_partial_foata(sigma: Permutation) -> Permutation:
    """phi_n o ... o phi_1 (sigma), which equals Phi(sigma)."""
    for k in range(1, sigma.n + 1):
        sigma = partial_foata(k, sigma)
    return sigma


# ==================== Fixed points ====================

def is_strong_fixed_point(sigma: Permutation) -> bool:
    """True iff every prefix {sigma_1, ..., sigma_i} is a set of consecutive integers."""
    low = high = None
    for i, value in enumerate(sigma, start=1):
        low = value if low is None else min(low, value)
        high = value if high is None else max(high, value)
        if high - low + 1 != i:
            return False
    return True


def is_partial_foata_fixed_point(sigma: Permutation) -> bool:
    """True iff phi_k(sigma) = sigma for every k, computed from the maps themselves."""
    return all(partial_foata(k, sigma) == sigma for k in range(1, sigma.n + 1))


def is_foata_fixed_point(word: Union[Permutation, Word]) -> bool:
    return tuple(foata_phi(word)) == tuple(word)


def is_strong_foata_class(permutations: Iterable[Permutation]) -> bool:
    """True iff phi_k(U) = U for every k, for a finite set U of permutations of one size."""
    members = set(permutations)
    if not members:
        return True
    sizes = {sigma.n for sigma in members}
    if len(sizes) != 1:
        raise DomainMismatchError("a Foata class must contain permutations of a single size")
    n = sizes.pop()
    return all(
        {partial_foata(k, sigma) for sigma in members} == members
        for k in range(1, n + 1)
    )
