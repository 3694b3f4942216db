from drf_spectacular.utils import extend_schema, extend_schema_view

from apps.core.views import DomainAPIView
from apps.han.serializers import HanMapRequestSerializer, TraceSerializer
from apps.han.services import han_h_inverse, han_h_via_codes
from apps.permutations.serializers import MapResultSerializer, PermutationRequestSerializer
from apps.permutations.services import as_permutation, parse_input


@extend_schema_view(post=extend_schema(request=HanMapRequestSerializer, responses=MapResultSerializer))
class HanMapView(DomainAPIView):
    """Apply H or its inverse."""
    request_serializer = HanMapRequestSerializer

    def compute(self, data):
        sigma = as_permutation(parse_input(data['permutation']))
        if data['inverse']:
            return MapResultSerializer.describe('han-inverse', sigma, han_h_inverse(sigma))
        return MapResultSerializer.describe('han', sigma, han_h_via_codes(sigma))


@extend_schema_view(post=extend_schema(request=PermutationRequestSerializer, responses=TraceSerializer))
class HanTraceView(DomainAPIView):
    """The reduction trace and the construction of H(sigma)."""
    request_serializer = PermutationRequestSerializer

    def compute(self, data):
        return TraceSerializer.describe(as_permutation(parse_input(data['permutation'])))
