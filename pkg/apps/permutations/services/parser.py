"""
Parser Service - Turns user text into validated permutations, words, codes
and multiset specs.

Accepted text is either a list of integers separated by spaces and/or commas,
or an undelimited digit string when every letter is a single digit.
"""
import re
from typing import List, Optional, Union

from apps.core.exceptions import DomainMismatchError, ParseError
from apps.permutations.domain import Code, MultisetSpec, Permutation, Word

DELIMITERS = re.compile(r'[\s,]+')
INTEGER_TOKEN = re.compile(r'^\d+$')
SPEC_TOKEN = re.compile(r'^(\d+)\^(\d+)$')

MAX_COMPACT_PERMUTATION = 9


def _tokenize(text: str, allow_zero: bool = False) -> List[int]:
    """
    Split text into integers, reporting the 1-based position of bad tokens.

    Args:
        text: Raw user text
        allow_zero: Whether 0 is a legal value (codes) or not (letters)

    Returns:
        List of integers
    """
    if text is None or not text.strip():
        raise ParseError("empty input")

    stripped = text.strip()
    if DELIMITERS.search(stripped):
        tokens = [token for token in DELIMITERS.split(stripped) if token != '']
    else:
        # Undelimited: one digit per letter
        tokens = list(stripped)

    values = []
    for position, token in enumerate(tokens, start=1):
        if not INTEGER_TOKEN.match(token):
            raise ParseError("not a nonnegative integer", position=position, token=token)
        value = int(token)
        if value == 0 and not allow_zero:
            raise ParseError("letters must be positive", position=position, token=token)
        values.append(value)
    return values


def _is_compact(text: str) -> bool:
    return not DELIMITERS.search(text.strip())


def parse_permutation(text: str) -> Permutation:
    """
    Parse a permutation in one-line notation.

    Examples: "392648517", "3,9,2", "10 2 1 3 4 5 6 7 8 9".
    """
    values = _tokenize(text)
    if _is_compact(text) and len(values) > MAX_COMPACT_PERMUTATION:
        raise ParseError(
            f"undelimited input of length {len(values)} is ambiguous; "
            "separate values with spaces or commas",
            position=MAX_COMPACT_PERMUTATION + 1,
            token=text.strip()[MAX_COMPACT_PERMUTATION]
        )
    return Permutation(tuple(values))


def parse_word(text: str, spec: Optional[MultisetSpec] = None) -> Word:
    """
    Parse a word. Without a spec, the spec is inferred from the letter counts
    with k equal to the largest letter.
    """
    letters = _tokenize(text)
    return Word(tuple(letters), spec)


def parse_code(text: str) -> Code:
    """Parse a code (a_1, ..., a_n); parentheses around the list are allowed."""
    cleaned = text.strip().strip('()[]') if text else text
    return Code(tuple(_tokenize(cleaned, allow_zero=True)))


def parse_spec(text: str) -> MultisetSpec:
    """
    Parse a multiset spec, either as multiplicities "3,2,2,2" or as
    powers "1^3,2^2,3^2,4^2".
    """
    if text is None or not text.strip():
        raise ParseError("empty spec")
    tokens = [token for token in DELIMITERS.split(text.strip()) if token != '']

    if any('^' in token for token in tokens):
        multiplicities = {}
        for position, token in enumerate(tokens, start=1):
            match = SPEC_TOKEN.match(token)
            if not match:
                raise ParseError("expected letter^multiplicity", position=position, token=token)
            letter, count = int(match.group(1)), int(match.group(2))
            if letter < 1:
                raise ParseError("letters must be positive", position=position, token=token)
            if letter in multiplicities:
                raise ParseError(f"letter {letter} listed twice", position=position, token=token)
            multiplicities[letter] = count
        k = max(multiplicities)
        return MultisetSpec(tuple(multiplicities.get(letter, 0) for letter in range(1, k + 1)))

    counts = []
    for position, token in enumerate(tokens, start=1):
        if not INTEGER_TOKEN.match(token):
            raise ParseError("multiplicity is not a nonnegative integer", position=position, token=token)
        counts.append(int(token))
    return MultisetSpec(tuple(counts))


def parse_input(text: str, spec: Optional[MultisetSpec] = None) -> Union[Permutation, Word]:
    """
    Parse text as a permutation when it is a rearrangement of [n] and no
    explicit spec is given, otherwise as a word.
    """
    letters = _tokenize(text)
    if spec is None and sorted(letters) == list(range(1, len(letters) + 1)):
        return parse_permutation(text)
    return Word(tuple(letters), spec)


def as_permutation(obj: Union[Permutation, Word]) -> Permutation:
    """Narrow a parsed input to a permutation, rejecting proper words."""
    if isinstance(obj, Permutation):
        return obj
    if obj.is_permutation():
        return obj.to_permutation()
    raise DomainMismatchError(
        f"'{obj}' is a word over {obj.spec.render()}; this operation is defined on permutations only"
    )
