from typing import Any, Dict, Optional, Union

from rest_framework import serializers

from apps.permutations.domain import MultisetSpec, Permutation, Word


class ParseRequestSerializer(serializers.Serializer):
    """Serializer for parse requests."""

    text = serializers.CharField()
    spec = serializers.CharField(required=False, allow_blank=True)


class PermutationRequestSerializer(serializers.Serializer):
    """Serializer for requests taking a single permutation."""

    permutation = serializers.CharField()


class PermutationSerializer(serializers.Serializer):
    """Machine rendering of a permutation or word: its length and its values in order."""

    n = serializers.IntegerField()
    values = serializers.ListField(child=serializers.IntegerField())

    def to_representation(self, instance):
        if isinstance(instance, (Permutation, Word)):
            instance = {'n': instance.n, 'values': list(instance)}
        return super().to_representation(instance)


class ParsedInputSerializer(serializers.Serializer):
    """A parsed permutation or word."""

    kind = serializers.ChoiceField(choices=['permutation', 'word'])
    text = serializers.CharField()
    letters = serializers.ListField(child=serializers.IntegerField())
    n = serializers.IntegerField()
    spec = serializers.CharField()
    sequence = PermutationSerializer()

    @classmethod
    def describe(cls, obj: Union[Permutation, Word]) -> Dict[str, Any]:
        is_permutation = isinstance(obj, Permutation)
        spec = MultisetSpec.for_permutations(obj.n) if is_permutation else obj.spec
        return cls({
            'kind': 'permutation' if is_permutation else 'word',
            'text': str(obj),
            'letters': list(obj),
            'n': obj.n,
            'spec': spec.render(),
            'sequence': obj,
        }).data


class MapResultSerializer(serializers.Serializer):
    """Result of applying a map (complement, Phi, phi_k, H, H^-1) to an input."""

    map = serializers.CharField()
    input = serializers.CharField()
    output = serializers.CharField()
    letters = serializers.ListField(child=serializers.IntegerField())
    source = PermutationSerializer()
    image = PermutationSerializer()
    k = serializers.IntegerField(required=False, allow_null=True)

    @classmethod
    def describe(cls, name: str, source, image, k: Optional[int] = None) -> Dict[str, Any]:
        return cls({
            'map': name,
            'input': str(source),
            'output': str(image),
            'letters': list(image),
            'source': source,
            'image': image,
            'k': k,
        }).data
