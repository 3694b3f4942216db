"""
Core value types: permutations, words over a multiset, codes in E_n and
gapped permutations.

All types are immutable and validate themselves on construction. Positions
reported in errors are 1-based.
"""
from collections import Counter
from collections.abc import Sequence
from dataclasses import dataclass, field
from math import factorial
from typing import Iterable, Iterator, List, Tuple

from apps.core.exceptions import CodeBoundError, GapMismatchError, ParseError


class _LetterSequence(Sequence):
    """Read-only sequence behaviour shared by permutations, words and codes."""

    def _items(self) -> Tuple[int, ...]:
        raise NotImplementedError

    def __getitem__(self, index):
        return self._items()[index]

    def __len__(self) -> int:
        return len(self._items())

    def __iter__(self) -> Iterator[int]:
        return iter(self._items())


@dataclass(frozen=True)
class MultisetSpec:
    """
    The multiset {1^m_1, 2^m_2, ..., k^m_k}.

    Zero multiplicities are allowed; the alphabet [k] is always the declared
    one, never the observed maximum letter.
    """
    m: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, 'm', tuple(self.m))
        for index, count in enumerate(self.m, start=1):
            if not isinstance(count, int) or count < 0:
                raise ParseError(f"multiplicity of letter {index} must be a nonnegative integer", position=index)

    @property
    def k(self) -> int:
        return len(self.m)

    @property
    def n(self) -> int:
        return sum(self.m)

    @classmethod
    def from_letters(cls, letters: Iterable[int], k: int = None) -> 'MultisetSpec':
        """Infer the spec from letter counts; k defaults to the largest letter."""
        counts = Counter(letters)
        if k is None:
            k = max(counts) if counts else 0
        return cls(tuple(counts.get(letter, 0) for letter in range(1, k + 1)))

    @classmethod
    def for_permutations(cls, n: int) -> 'MultisetSpec':
        return cls((1,) * n)

    def trimmed(self) -> 'MultisetSpec':
        """Drop trailing unused letters."""
        m = list(self.m)
        while m and m[-1] == 0:
            m.pop()
        return MultisetSpec(tuple(m))

    def class_size(self) -> int:
        """Number of words in the rearrangement class (multinomial coefficient)."""
        size = factorial(self.n)
        for count in self.m:
            size //= factorial(count)
        return size

    def sorted_letters(self) -> List[int]:
        """The lexicographically least word of the class."""
        letters = []
        for letter, count in enumerate(self.m, start=1):
            letters.extend([letter] * count)
        return letters

    def is_permutation_spec(self) -> bool:
        return all(count == 1 for count in self.m)

    def render(self) -> str:
        return ','.join(f"{letter}^{count}" for letter, count in enumerate(self.m, start=1))


@dataclass(frozen=True)
class Permutation(_LetterSequence):
    """
    A permutation of [n] in one-line notation.

    The empty permutation exists only as the recursion base of H and Phi;
    parsers never produce it.
    """
    values: Tuple[int, ...]

    def __post_init__(self):
        values = tuple(self.values)
        object.__setattr__(self, 'values', values)
        n = len(values)
        seen = set()
        for position, value in enumerate(values, start=1):
            if not isinstance(value, int) or isinstance(value, bool):
                raise ParseError("value is not an integer", position=position, token=str(value))
            if value < 1 or value > n:
                raise ParseError(f"value {value} is out of range [1, {n}]", position=position, token=str(value))
            if value in seen:
                raise ParseError(f"duplicate value {value}", position=position, token=str(value))
            seen.add(value)

    def _items(self) -> Tuple[int, ...]:
        return self.values

    @property
    def n(self) -> int:
        return len(self.values)

    @property
    def alphabet_size(self) -> int:
        return len(self.values)

    @classmethod
    def identity(cls, n: int) -> 'Permutation':
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def reversal(cls, n: int) -> 'Permutation':
        return cls(tuple(range(n, 0, -1)))

    @classmethod
    def empty(cls) -> 'Permutation':
        return cls(())

    def to_word(self) -> 'Word':
        return Word(self.values, MultisetSpec.for_permutations(self.n))

    def __str__(self) -> str:
        from apps.permutations.services.render import render_compact
        return render_compact(self.values)


@dataclass(frozen=True)
class Word(_LetterSequence):
    """A member of the rearrangement class R(X) for X given by `spec`."""
    letters: Tuple[int, ...]
    spec: MultisetSpec = field(default=None)

    def __post_init__(self):
        letters = tuple(self.letters)
        object.__setattr__(self, 'letters', letters)
        for position, letter in enumerate(letters, start=1):
            if not isinstance(letter, int) or isinstance(letter, bool) or letter < 1:
                raise ParseError("letter must be a positive integer", position=position, token=str(letter))
        if self.spec is None:
            object.__setattr__(self, 'spec', MultisetSpec.from_letters(letters))
            return
        for position, letter in enumerate(letters, start=1):
            if letter > self.spec.k:
                raise ParseError(
                    f"letter {letter} exceeds the alphabet size {self.spec.k}",
                    position=position,
                    token=str(letter)
                )
        counts = Counter(letters)
        for letter, expected in enumerate(self.spec.m, start=1):
            if counts.get(letter, 0) != expected:
                raise ParseError(
                    f"letter {letter} occurs {counts.get(letter, 0)} times, spec requires {expected}"
                )

    def _items(self) -> Tuple[int, ...]:
        return self.letters

    @property
    def n(self) -> int:
        return len(self.letters)

    @property
    def alphabet_size(self) -> int:
        return self.spec.k

    def is_permutation(self) -> bool:
        return self.spec.is_permutation_spec()

    def to_permutation(self) -> Permutation:
        return Permutation(self.letters)

    def __str__(self) -> str:
        from apps.permutations.services.render import render_compact
        return render_compact(self.letters)


@dataclass(frozen=True, eq=False)
class Code(_LetterSequence):
    """
    An element (a_1, ..., a_n) of E_n, i.e. 0 <= a_i <= i-1.

    Equality is on entries alone, so a StatVector equals the Code with the
    same entries.
    """
    entries: Tuple[int, ...]

    def __post_init__(self):
        entries = tuple(self.entries)
        object.__setattr__(self, 'entries', entries)
        for position, entry in enumerate(entries, start=1):
            if not isinstance(entry, int) or isinstance(entry, bool):
                raise CodeBoundError("entry is not an integer", position=position, token=str(entry))
            if entry < 0 or entry > position - 1:
                raise CodeBoundError(
                    f"entry {entry} violates 0 <= a_{position} <= {position - 1}",
                    position=position,
                    token=str(entry)
                )

    def _items(self) -> Tuple[int, ...]:
        return self.entries

    @property
    def n(self) -> int:
        return len(self.entries)

    @classmethod
    def zeros(cls, n: int) -> 'Code':
        return cls((0,) * n)

    @classmethod
    def maximal(cls, n: int) -> 'Code':
        return cls(tuple(range(n)))

    def total(self) -> int:
        return sum(self.entries)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Code):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def __str__(self) -> str:
        return ','.join(str(entry) for entry in self.entries)


class StatVector(Code):
    """
    A t- or s-vector. Both always lie in E_n, so the type is a Code whose
    bound is re-checked on construction.
    """
    pass


@dataclass(frozen=True)
class GappedPermutation(_LetterSequence):
    """A permutation of {1, ..., n} \\ {gap}, of length n-1."""
    values: Tuple[int, ...]
    gap: int

    def __post_init__(self):
        values = tuple(self.values)
        object.__setattr__(self, 'values', values)
        n = len(values) + 1
        if not 1 <= self.gap <= n:
            raise GapMismatchError(f"gap {self.gap} is out of range [1, {n}]", token=str(self.gap))
        seen = set()
        for position, value in enumerate(values, start=1):
            if value == self.gap:
                raise GapMismatchError(f"value {value} equals the gap", position=position, token=str(value))
            if not 1 <= value <= n:
                raise GapMismatchError(f"value {value} is out of range [1, {n}]", position=position, token=str(value))
            if value in seen:
                raise GapMismatchError(f"duplicate value {value}", position=position, token=str(value))
            seen.add(value)

    def _items(self) -> Tuple[int, ...]:
        return self.values

    @property
    def n(self) -> int:
        """The ambient size, one more than the length."""
        return len(self.values) + 1


def complement(sigma: Permutation) -> Permutation:
    """c(sigma)_i = n + 1 - sigma_i."""
    n = sigma.n
    return Permutation(tuple(n + 1 - value for value in sigma.values))

