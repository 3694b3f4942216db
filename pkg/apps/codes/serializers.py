from typing import Any, Dict

from rest_framework import serializers

from apps.codes.services import DECODERS, ENCODERS, TRANSFORMS
from apps.permutations.domain import Code, Permutation
from apps.permutations.serializers import PermutationSerializer


class EncodeRequestSerializer(serializers.Serializer):
    """Serializer for encoding a permutation."""

    scheme = serializers.ChoiceField(choices=sorted(ENCODERS))
    permutation = serializers.CharField()


class DecodeRequestSerializer(serializers.Serializer):
    """Serializer for decoding a code."""

    scheme = serializers.ChoiceField(choices=sorted(DECODERS))
    code = serializers.CharField()


class TransformRequestSerializer(serializers.Serializer):
    """Serializer for code-to-code transforms."""

    transform = serializers.ChoiceField(choices=sorted(TRANSFORMS))
    code = serializers.CharField()


class CodeResultSerializer(serializers.Serializer):
    """Result of an encode, decode or transform."""

    operation = serializers.CharField()
    scheme = serializers.CharField()
    input = serializers.CharField()
    output = serializers.CharField()
    entries = serializers.ListField(child=serializers.IntegerField())
    total = serializers.IntegerField(allow_null=True)
    permutation = PermutationSerializer(allow_null=True)

    @classmethod
    def describe(cls, operation: str, scheme: str, source, result) -> Dict[str, Any]:
        # encode and decode each carry exactly one permutation; transforms carry none
        permutation = next((side for side in (source, result) if isinstance(side, Permutation)), None)
        return cls({
            'operation': operation,
            'scheme': scheme,
            'input': str(source),
            'output': str(result),
            'entries': list(result),
            'total': result.total() if isinstance(result, Code) else None,
            'permutation': permutation,
        }).data

    @classmethod
    def encoded(cls, scheme: str, sigma: Permutation, code: Code) -> Dict[str, Any]:
        return cls.describe('encode', scheme, sigma, code)

    @classmethod
    def decoded(cls, scheme: str, code: Code, sigma: Permutation) -> Dict[str, Any]:
        return cls.describe('decode', scheme, code, sigma)
