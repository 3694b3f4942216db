from typing import Any, Dict

from rest_framework import serializers

from apps.foata.services import is_foata_fixed_point, is_partial_foata_fixed_point, is_strong_fixed_point
from apps.han.services import han_h_via_codes
from apps.permutations.domain import Permutation
from apps.permutations.serializers import PermutationSerializer


class FoataMapRequestSerializer(serializers.Serializer):
    """Phi on a permutation or word, or phi_k on a permutation when k is given."""

    text = serializers.CharField()
    spec = serializers.CharField(required=False, allow_blank=True)
    k = serializers.IntegerField(required=False, min_value=1)


class FixedQuerySerializer(serializers.Serializer):
    """Which of the fixed-point predicates hold for a permutation."""

    input = serializers.CharField()
    permutation = PermutationSerializer()
    strong = serializers.BooleanField()
    partial_foata = serializers.BooleanField()
    foata = serializers.BooleanField()
    han = serializers.BooleanField()

    @classmethod
    def describe(cls, sigma: Permutation) -> Dict[str, Any]:
        return cls({
            'input': str(sigma),
            'permutation': sigma,
            'strong': is_strong_fixed_point(sigma),
            'partial_foata': is_partial_foata_fixed_point(sigma),
            'foata': is_foata_fixed_point(sigma),
            'han': han_h_via_codes(sigma) == sigma,
        }).data
