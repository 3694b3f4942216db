from drf_spectacular.utils import extend_schema, extend_schema_view

from apps.core.views import DomainAPIView
from apps.permutations.domain import complement
from apps.permutations.serializers import (
    MapResultSerializer,
    ParseRequestSerializer,
    ParsedInputSerializer,
    PermutationRequestSerializer,
)
from apps.permutations.services import as_permutation, parse_input, parse_spec


@extend_schema_view(post=extend_schema(request=ParseRequestSerializer, responses=ParsedInputSerializer))
class ParseView(DomainAPIView):
    """Parse text into a permutation or a word."""
    request_serializer = ParseRequestSerializer

    def compute(self, data):
        spec = parse_spec(data['spec']) if data.get('spec') else None
        return ParsedInputSerializer.describe(parse_input(data['text'], spec))


@extend_schema_view(post=extend_schema(request=PermutationRequestSerializer, responses=MapResultSerializer))
class ComplementView(DomainAPIView):
    """c(sigma)_i = n + 1 - sigma_i."""
    request_serializer = PermutationRequestSerializer

    def compute(self, data):
        sigma = as_permutation(parse_input(data['permutation']))
        return MapResultSerializer.describe('complement', sigma, complement(sigma))
