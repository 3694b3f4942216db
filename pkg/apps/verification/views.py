from drf_spectacular.utils import extend_schema, extend_schema_view

from apps.core.views import DomainAPIView
from apps.permutations.services import parse_spec
from apps.verification.serializers import (
    DistributionTableSerializer,
    FixedPointListSerializer,
    FixedPointsRequestSerializer,
    SuiteResultSerializer,
    TableRequestSerializer,
    VerifyRequestSerializer,
)
from apps.verification.services.verification_service import VerificationService


@extend_schema_view(post=extend_schema(request=VerifyRequestSerializer, responses=SuiteResultSerializer))
class VerifyView(DomainAPIView):
    """Run a verification suite for every size up to n."""
    request_serializer = VerifyRequestSerializer

    def compute(self, data):
        service = VerificationService(partitions=data.get('partitions'), distributed=data.get('distributed'))
        reports = service.run_suite(data['suite'], data['n'])
        return SuiteResultSerializer.describe(data['suite'], data['n'], reports)


@extend_schema_view(post=extend_schema(request=TableRequestSerializer, responses=DistributionTableSerializer))
class TableView(DomainAPIView):
    """Distribution table of a statistic."""
    request_serializer = TableRequestSerializer

    def compute(self, data):
        service = VerificationService()
        if data.get('spec'):
            spec = parse_spec(data['spec'])
            return DistributionTableSerializer.describe(service.table(data['stat'], spec), spec.render())
        return DistributionTableSerializer.describe(service.table(data['stat'], data['n']), f"S_{data['n']}")


@extend_schema_view(post=extend_schema(request=FixedPointsRequestSerializer, responses=FixedPointListSerializer))
class FixedPointsView(DomainAPIView):
    """All fixed points of H in S_n."""
    request_serializer = FixedPointsRequestSerializer

    def compute(self, data):
        points = VerificationService().fixed_points(data['n'])
        return FixedPointListSerializer({
            'n': data['n'],
            'count': len(points),
            'fixed_points': [str(sigma) for sigma in points],
            'permutations': points,
        }).data
