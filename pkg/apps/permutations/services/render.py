"""
Text renderers for permutations, words and codes.
"""
from typing import Iterable, Sequence


def render_compact(values: Sequence[int]) -> str:
    """
    Render undelimited ("392648517") when every value is
    a single nonzero digit, otherwise space-separated. The empty sequence
    renders as the empty set sign.
    """
    if len(values) == 0:
        return '∅'
    if all(1 <= value <= 9 for value in values):
        return ''.join(str(value) for value in values)
    return render_delimited(values)


def render_delimited(values: Iterable[int], separator: str = ' ') -> str:
    return separator.join(str(value) for value in values)


def render_code(entries: Iterable[int]) -> str:
    """Render a code or statistic vector as comma-separated integers."""
    return ','.join(str(entry) for entry in entries)


def render_tuple(entries: Iterable[int]) -> str:
    """Render a vector in parenthesized form: (0,1,1,2)."""
    return f"({render_code(entries)})"
