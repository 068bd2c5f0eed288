"""
Serializers for the plane APIs.
"""
from django.utils.translation import gettext as _

from rest_framework import serializers

from core.models import CensusRun
from geometry.checks import CHECKS
from geometry.exceptions import GeometryError
from geometry.field import field_for
from geometry.parsing import parse_plane


class FieldSerializer(serializers.Serializer):
    """Serializer for the field a request works over."""
    q = serializers.IntegerField(min_value=2)
    modulus = serializers.RegexField(
        r'^[01]+$', required=False, allow_blank=False,
    )

    def validate(self, attrs):
        """Build the field; bad q or modulus are validation errors."""
        try:
            attrs['field'] = field_for(
                attrs['q'], modulus=attrs.get('modulus'),
            )
        except GeometryError as exc:
            raise serializers.ValidationError(str(exc), code='field')
        return attrs


class RepresentativesQuerySerializer(FieldSerializer):
    """Query parameters of the representatives listing."""
    stabilizers = serializers.BooleanField(default=False)


class ClassifyRequestSerializer(FieldSerializer):
    """Serializer for a plane to classify."""
    plane = serializers.CharField(trim_whitespace=True)
    lines = serializers.BooleanField(default=False)

    def validate(self, attrs):
        """Parse the plane over the requested field."""
        attrs = super().validate(attrs)
        try:
            attrs['parsed'] = parse_plane(attrs['field'], attrs['plane'])
        except GeometryError as exc:
            msg = _('Unable to read plane: %(error)s') % {'error': exc}
            raise serializers.ValidationError({'plane': msg}, code='parse')
        return attrs


class VerifyRequestSerializer(FieldSerializer):
    """Serializer for a batch of named checks."""
    checks = serializers.ListField(
        child=serializers.ChoiceField(choices=sorted(CHECKS)),
        allow_empty=False,
    )
    samples = serializers.IntegerField(min_value=0, default=0)


class PlaneRecordSerializer(serializers.Serializer):
    """Classification of one plane."""
    q = serializers.IntegerField()
    modulus = serializers.CharField()
    plane = serializers.ListField(
        child=serializers.ListField(child=serializers.IntegerField()),
    )
    label = serializers.CharField()
    point_od = serializers.ListField(child=serializers.IntegerField())
    nucleus_meet_dim = serializers.IntegerField()
    cubic = serializers.DictField(
        child=serializers.IntegerField(), allow_null=True,
    )
    cubic_type = serializers.CharField(allow_null=True)
    rank_le2_collinear = serializers.BooleanField(allow_null=True)
    inflexion_count = serializers.IntegerField(required=False)
    line_od = serializers.DictField(
        child=serializers.IntegerField(), required=False,
    )


class RepresentativeSerializer(serializers.Serializer):
    """One representative plane per orbit."""
    label = serializers.CharField()
    plane = serializers.CharField()
    point_od = serializers.ListField(child=serializers.IntegerField())
    stabilizer_order = serializers.IntegerField(required=False)
    orbit_size = serializers.IntegerField(required=False)


class CheckResultSerializer(serializers.Serializer):
    """Outcome of one named check."""
    name = serializers.CharField()
    passed = serializers.BooleanField()
    details = serializers.DictField()


class CensusRunSerializer(serializers.ModelSerializer):
    """Serializer for census runs."""

    class Meta:
        model = CensusRun
        fields = ['id', 'q', 'modulus', 'group', 'complete', 'total',
                  'counts', 'created']
        read_only_fields = fields


class CensusRunDetailSerializer(CensusRunSerializer):
    """Serializer for census run detail view."""

    class Meta(CensusRunSerializer.Meta):
        fields = CensusRunSerializer.Meta.fields + [
            'shards', 'checksum', 'representatives', 'runtime_seconds',
            'output_path',
        ]
        read_only_fields = fields
