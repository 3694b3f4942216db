from drf_spectacular.utils import extend_schema, extend_schema_view

from apps.core.views import DomainAPIView
from apps.foata.serializers import FixedQuerySerializer, FoataMapRequestSerializer
from apps.foata.services import foata_phi, partial_foata
from apps.permutations.serializers import MapResultSerializer, PermutationRequestSerializer
from apps.permutations.services import as_permutation, parse_input, parse_spec


@extend_schema_view(post=extend_schema(request=FoataMapRequestSerializer, responses=MapResultSerializer))
class FoataMapView(DomainAPIView):
    """Apply Phi, or the partial map phi_k."""
    request_serializer = FoataMapRequestSerializer

    def compute(self, data):
        spec = parse_spec(data['spec']) if data.get('spec') else None
        word = parse_input(data['text'], spec)
        k = data.get('k')
        if k is None:
            return MapResultSerializer.describe('foata', word, foata_phi(word))
        sigma = as_permutation(word)
        return MapResultSerializer.describe('partial-foata', sigma, partial_foata(k, sigma), k=k)


@extend_schema_view(post=extend_schema(request=PermutationRequestSerializer, responses=FixedQuerySerializer))
class FixedQueryView(DomainAPIView):
    """Report the strong, partial-Foata, Foata and H fixed-point predicates."""
    request_serializer = PermutationRequestSerializer

    def compute(self, data):
        return FixedQuerySerializer.describe(as_permutation(parse_input(data['permutation'])))
