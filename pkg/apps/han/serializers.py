from typing import Any, Dict

from rest_framework import serializers

from apps.codes.services import cyclic_major_encode
from apps.han.services import c_iteration_trace, han_construction_trace, han_h_via_codes, l_sequence
from apps.permutations.domain import Permutation
from apps.permutations.serializers import PermutationSerializer


class HanMapRequestSerializer(serializers.Serializer):
    """Serializer for H and H^-1 requests."""

    permutation = serializers.CharField()
    inverse = serializers.BooleanField(default=False)


class TraceRowSerializer(serializers.Serializer):
    """One reduction step C^j(sigma) with its last value and code entry."""

    j = serializers.IntegerField()
    position = serializers.IntegerField()
    reduced = serializers.CharField()
    last = serializers.IntegerField()
    s_entry = serializers.IntegerField()


class ConstructionRowSerializer(serializers.Serializer):
    """One step building H(C^j(sigma)) from H(C^{j+1}(sigma))."""

    j = serializers.IntegerField()
    reduced = serializers.CharField()
    x = serializers.IntegerField()
    inner = serializers.CharField()
    image = serializers.CharField()


class TraceSerializer(serializers.Serializer):
    """Both columns of the worked example for one permutation."""

    input = serializers.CharField()
    output = serializers.CharField()
    source = PermutationSerializer()
    image = PermutationSerializer()
    cyclic_major = serializers.ListField(child=serializers.IntegerField())
    l_sequence = serializers.ListField(child=serializers.IntegerField())
    rows = TraceRowSerializer(many=True)
    construction = ConstructionRowSerializer(many=True)

    @classmethod
    def describe(cls, sigma: Permutation) -> Dict[str, Any]:
        image = han_h_via_codes(sigma)
        return cls({
            'input': str(sigma),
            'output': str(image),
            'source': sigma,
            'image': image,
            'cyclic_major': list(cyclic_major_encode(sigma)),
            'l_sequence': l_sequence(sigma),
            'rows': c_iteration_trace(sigma),
            'construction': han_construction_trace(sigma),
        }).data
