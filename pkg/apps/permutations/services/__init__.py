"""
Permutation services for parsing and rendering.
"""
from .parser import (
    parse_permutation,
    parse_word,
    parse_code,
    parse_spec,
    parse_input,
    as_permutation,
)
from .render import render_compact, render_delimited, render_code, render_tuple

__all__ = [
    'parse_permutation',
    'parse_word',
    'parse_code',
    'parse_spec',
    'parse_input',
    'as_permutation',
    'render_compact',
    'render_delimited',
    'render_code',
    'render_tuple',
]
