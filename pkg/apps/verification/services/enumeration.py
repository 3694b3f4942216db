"""
Enumeration Service - deterministic lexicographic enumeration of S_n, of
rearrangement classes R(X) and of E_n, guarded by the configured caps.
"""
import itertools
from typing import Iterator, List, Optional

from django.conf import settings

from apps.core.exceptions import CapExceededError
from apps.permutations.domain import Code, MultisetSpec, Permutation, Word


def max_n(override: Optional[int] = None) -> int:
    return override if override is not None else settings.MAHONIA_MAX_N


def max_class_size(override: Optional[int] = None) -> int:
    return override if override is not None else settings.MAHONIA_MAX_CLASS_SIZE


def check_n(n: int, cap: Optional[int] = None) -> None:
    cap = max_n(cap)
    if n < 0:
        raise CapExceededError(f"n = {n} must be nonnegative")
    if n > cap:
        raise CapExceededError(f"n = {n} exceeds the enumeration cap {cap} (set MAHONIA_MAX_N or --max-n)")


def enumerate_sn(n: int, cap: Optional[int] = None) -> Iterator[Permutation]:
    """All of S_n in lexicographic order."""
    check_n(n, cap)
    for values in itertools.permutations(range(1, n + 1)):
        yield Permutation(values)


def next_rearrangement(letters: List[int]) -> Optional[List[int]]:
    """
    The lexicographic successor of a word, or None for the last one.
    Repeated letters are handled by the non-strict comparisons.
    """
    a = list(letters)
    j = len(a) - 2
    while j >= 0 and a[j] >= a[j + 1]:
        j -= 1
    if j < 0:
        return None
    tail = len(a) - 1
    while a[j] >= a[tail]:
        tail -= 1
    a[j], a[tail] = a[tail], a[j]
    a[j + 1:] = reversed(a[j + 1:])
    return a


def enumerate_rearrangements(spec: MultisetSpec, cap: Optional[int] = None) -> Iterator[Word]:
    """All words of R(X) in lexicographic order."""
    size = spec.class_size()
    limit = max_class_size(cap)
    if size > limit:
        raise CapExceededError(
            f"class {spec.render()} has {size} words, more than the cap {limit} "
            "(set MAHONIA_MAX_CLASS_SIZE)"
        )
    letters = spec.sorted_letters()
    if not letters:
        return
    while letters is not None:
        yield Word(tuple(letters), spec)
        letters = next_rearrangement(letters)


def enumerate_codes(n: int, cap: Optional[int] = None) -> Iterator[Code]:
    """All of E_n in lexicographic order."""
    check_n(n, cap)
    for entries in itertools.product(*(range(i) for i in range(1, n + 1))):
        yield Code(entries)


def word_family(n: int, max_k: Optional[int] = None) -> List[MultisetSpec]:
    """
    Every spec (m_1, ..., m_k) with 1 <= k <= max_k, all m_i >= 1 and sum n,
    in lexicographic order.
    """
    if max_k is None:
        max_k = settings.MAHONIA_WORD_ALPHABET_MAX
    specs = []
    for k in range(1, min(max_k, n) + 1):
        for cuts in itertools.combinations(range(1, n), k - 1):
            bounds = (0,) + cuts + (n,)
            specs.append(MultisetSpec(tuple(bounds[i + 1] - bounds[i] for i in range(k))))
    return sorted(specs, key=lambda spec: spec.m)
