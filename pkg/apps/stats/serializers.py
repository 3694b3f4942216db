from typing import Any, Dict, Union

from rest_framework import serializers

from apps.permutations.domain import Permutation, Word
from apps.stats.services import Statistic, StatisticRegistry


class StatRequestSerializer(serializers.Serializer):
    """Serializer for statistic evaluation requests."""

    stat = serializers.ChoiceField(choices=StatisticRegistry.names())
    text = serializers.CharField()
    spec = serializers.CharField(required=False, allow_blank=True)


class StatResultSerializer(serializers.Serializer):
    """
    Value of one statistic. Scalars are integers, vectors and descent sets
    are lists of integers.
    """

    stat = serializers.CharField()
    kind = serializers.CharField()
    input = serializers.CharField()
    spec = serializers.CharField()
    value = serializers.JSONField()

    @classmethod
    def describe(cls, statistic: Statistic, word: Union[Permutation, Word]) -> Dict[str, Any]:
        spec = word.spec.render() if isinstance(word, Word) else f"S_{word.n}"
        return cls({
            'stat': statistic.name,
            'kind': statistic.kind.value,
            'input': str(word),
            'spec': spec,
            'value': statistic.evaluate(word),
        }).data
