from drf_spectacular.utils import extend_schema, extend_schema_view

from apps.codes.serializers import (
    CodeResultSerializer,
    DecodeRequestSerializer,
    EncodeRequestSerializer,
    TransformRequestSerializer,
)
from apps.codes.services import DECODERS, ENCODERS, TRANSFORMS
from apps.core.views import DomainAPIView
from apps.permutations.services import as_permutation, parse_code, parse_input


@extend_schema_view(post=extend_schema(request=EncodeRequestSerializer, responses=CodeResultSerializer))
class EncodeView(DomainAPIView):
    """Encode a permutation with the Lehmer or cyclic major code."""
    request_serializer = EncodeRequestSerializer

    def compute(self, data):
        sigma = as_permutation(parse_input(data['permutation']))
        return CodeResultSerializer.encoded(data['scheme'], sigma, ENCODERS[data['scheme']](sigma))


@extend_schema_view(post=extend_schema(request=DecodeRequestSerializer, responses=CodeResultSerializer))
class DecodeView(DomainAPIView):
    """Decode a code in E_n back to a permutation."""
    request_serializer = DecodeRequestSerializer

    def compute(self, data):
        code = parse_code(data['code'])
        return CodeResultSerializer.decoded(data['scheme'], code, DECODERS[data['scheme']](code))


@extend_schema_view(post=extend_schema(request=TransformRequestSerializer, responses=CodeResultSerializer))
class TransformView(DomainAPIView):
    """Apply t-to-s, s-to-t or the code complement."""
    request_serializer = TransformRequestSerializer

    def compute(self, data):
        code = parse_code(data['code'])
        return CodeResultSerializer.describe('transform', data['transform'], code, TRANSFORMS[data['transform']](code))
