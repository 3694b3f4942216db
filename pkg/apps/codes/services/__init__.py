"""
Code services: Lehmer code, cyclic major code and their transforms.
"""
from .codes import (
    lehmer_encode,
    lehmer_decode,
    cyclic_major_encode,
    cyclic_major_decode,
    t_to_s,
    s_to_t,
    code_complement,
)

ENCODERS = {
    'lehmer': lehmer_encode,
    'cmaj': cyclic_major_encode,
}

DECODERS = {
    'lehmer': lehmer_decode,
    'cmaj': cyclic_major_decode,
}

TRANSFORMS = {
    't-to-s': t_to_s,
    's-to-t': s_to_t,
    'complement': code_complement,
}

__all__ = [
    'lehmer_encode',
    'lehmer_decode',
    'cyclic_major_encode',
    'cyclic_major_decode',
    't_to_s',
    's_to_t',
    'code_complement',
    'ENCODERS',
    'DECODERS',
    'TRANSFORMS',
]
