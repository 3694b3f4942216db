from typing import Any, Dict, List

from rest_framework import serializers

from apps.permutations.serializers import PermutationSerializer
from apps.stats.services import StatisticKind, StatisticRegistry
from apps.verification.services import DistributionTable
from apps.verification.services.verification_service import SUITE_CHOICES, VerificationReport


class VerifyRequestSerializer(serializers.Serializer):
    """Serializer for verification runs."""

    suite = serializers.ChoiceField(choices=SUITE_CHOICES, default='all')
    n = serializers.IntegerField(min_value=1)
    partitions = serializers.IntegerField(required=False, min_value=1)
    distributed = serializers.BooleanField(required=False)


class TableRequestSerializer(serializers.Serializer):
    """A distribution table over S_n or over R(X) when a spec is given."""

    stat = serializers.ChoiceField(choices=StatisticRegistry.names(StatisticKind.SCALAR))
    n = serializers.IntegerField(required=False, min_value=1)
    spec = serializers.CharField(required=False, allow_blank=True)

    def validate(self, attrs):
        if attrs.get('n') is None and not attrs.get('spec'):
            raise serializers.ValidationError("either n or spec is required")
        return attrs


class FixedPointsRequestSerializer(serializers.Serializer):
    """Serializer for listing the fixed points of H."""

    n = serializers.IntegerField(min_value=1)


class VerificationReportSerializer(serializers.Serializer):
    """One check at one size; a failure carries a re-checkable counterexample."""

    check_name = serializers.CharField()
    suite = serializers.CharField()
    n = serializers.IntegerField()
    population = serializers.IntegerField()
    passed = serializers.BooleanField()
    counterexample = serializers.JSONField(allow_null=True)
    index = serializers.IntegerField(allow_null=True)
    elapsed = serializers.FloatField()
    partitions = serializers.IntegerField()
    caps = serializers.JSONField()
    notes = serializers.JSONField()


class SuiteResultSerializer(serializers.Serializer):
    """Every report of a `verify` run."""

    suite = serializers.CharField()
    n = serializers.IntegerField()
    passed = serializers.BooleanField()
    failed = serializers.IntegerField()
    reports = VerificationReportSerializer(many=True)

    @classmethod
    def describe(cls, suite: str, n: int, reports: List[VerificationReport]) -> Dict[str, Any]:
        failed = sum(1 for report in reports if not report.passed)
        return cls({
            'suite': suite,
            'n': n,
            'passed': failed == 0,
            'failed': failed,
            'reports': reports,
        }).data


class DistributionTableSerializer(serializers.Serializer):
    """Coefficients c_v = number of elements with statistic value v."""

    stat = serializers.CharField(source='stat_name')
    target = serializers.CharField()
    population = serializers.IntegerField()
    coefficients = serializers.ListField(child=serializers.IntegerField())

    @classmethod
    def describe(cls, table: DistributionTable, target: str) -> Dict[str, Any]:
        return cls({
            'stat_name': table.stat_name,
            'target': target,
            'population': table.population,
            'coefficients': list(table.coefficients),
        }).data


class FixedPointListSerializer(serializers.Serializer):
    """The constructive list of fixed points of H."""

    n = serializers.IntegerField()
    count = serializers.IntegerField()
    fixed_points = serializers.ListField(child=serializers.CharField())
    permutations = PermutationSerializer(many=True)
