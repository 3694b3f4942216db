from drf_spectacular.utils import extend_schema, extend_schema_view

from apps.core.views import DomainAPIView
from apps.permutations.services import parse_input, parse_spec
from apps.stats.serializers import StatRequestSerializer, StatResultSerializer
from apps.stats.services import StatisticRegistry


@extend_schema_view(post=extend_schema(request=StatRequestSerializer, responses=StatResultSerializer))
class EvaluateView(DomainAPIView):
    """Evaluate a statistic on a permutation or word."""
    request_serializer = StatRequestSerializer

    def compute(self, data):
        spec = parse_spec(data['spec']) if data.get('spec') else None
        word = parse_input(data['text'], spec)
        return StatResultSerializer.describe(StatisticRegistry.require(data['stat']), word)
