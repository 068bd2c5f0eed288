"""
Views for the plane APIs.
"""
import logging

from drf_spectacular.utils import (
    extend_schema_view,
    extend_schema,
    OpenApiParameter,
    OpenApiTypes,
)
from rest_framework import (
    viewsets,
    mixins,
    status,
)
from rest_framework.decorators import action
from rest_framework.exceptions import ValidationError
from rest_framework.response import Response

from core.models import CensusRun
from geometry.checks import run_check
from geometry.exceptions import GeometryError, OutOfScopeError
from geometry.planes import classify_plane_record, full_record
from geometry.reports import record_dict, representative_rows
from planes import serializers

logger = logging.getLogger(__name__)


class PlaneViewSet(viewsets.GenericViewSet):
    """Classify planes and list orbit representatives."""
    serializer_class = serializers.ClassifyRequestSerializer

    def get_serializer_class(self):
        """Return the serializer class for request."""
        if self.action == 'representatives':
            return serializers.RepresentativesQuerySerializer
        elif self.action == 'verify':
            return serializers.VerifyRequestSerializer

        return self.serializer_class

    @extend_schema(responses={
        200: serializers.PlaneRecordSerializer,
        422: OpenApiTypes.OBJECT,
    })
    @action(methods=['POST'], detail=False)
    def classify(self, request):
        """Orbit label and invariants of one plane."""
        serializer = self.get_serializer(data=request.data)
        serializer.is_valid(raise_exception=True)
        plane = serializer.validated_data['parsed']
        classify = (
            full_record if serializer.validated_data['lines']
            else classify_plane_record
        )
        try:
            label, record = classify(plane)
        except OutOfScopeError as exc:
            return Response(
                {'detail': str(exc)},
                status=status.HTTP_422_UNPROCESSABLE_ENTITY,
            )
        except GeometryError as exc:
            logger.error('classification failed: %s', exc)
            raise ValidationError({'plane': str(exc)})

        data = record_dict(plane, label, record)
        return Response(serializers.PlaneRecordSerializer(data).data)

    @extend_schema(
        parameters=[
            OpenApiParameter('q', OpenApiTypes.INT, required=True),
            OpenApiParameter(
                'modulus', OpenApiTypes.STR,
                description='Irreducible modulus as an MSB-first bit string',
            ),
            OpenApiParameter(
                'stabilizers', OpenApiTypes.BOOL,
                description='Include stabilizer orders and orbit sizes.',
            ),
        ],
        responses=serializers.RepresentativeSerializer(many=True),
    )
    @action(methods=['GET'], detail=False)
    def representatives(self, request):
        """One representative plane per orbit that exists at q."""
        serializer = self.get_serializer(data=request.query_params)
        serializer.is_valid(raise_exception=True)
        try:
            rows = representative_rows(
                serializer.validated_data['field'],
                serializer.validated_data['stabilizers'],
            )
        except GeometryError as exc:
            raise ValidationError({'q': str(exc)})

        return Response(
            serializers.RepresentativeSerializer(rows, many=True).data
        )

    @extend_schema(responses=serializers.CheckResultSerializer(many=True))
    @action(methods=['POST'], detail=False)
    def verify(self, request):
        """Run named checks; failures are reported, not raised."""
        serializer = self.get_serializer(data=request.data)
        serializer.is_valid(raise_exception=True)
        F = serializer.validated_data['field']
        results = [
            run_check(name, F, samples=serializer.validated_data['samples'])
            for name in serializer.validated_data['checks']
        ]
        return Response(
            serializers.CheckResultSerializer(results, many=True).data
        )


@extend_schema_view(
    list=extend_schema(
        parameters=[
            OpenApiParameter(
                'q',
                OpenApiTypes.INT,
                description='Only runs over the field of this order.',
            ),
            OpenApiParameter(
                'group',
                OpenApiTypes.STR, enum=['pgl3', 'sym7'],
                description='Only runs under this group.',
            ),
        ]
    )
)
class CensusRunViewSet(mixins.ListModelMixin,
                       mixins.RetrieveModelMixin,
                       viewsets.GenericViewSet):
    """Read saved census runs."""
    serializer_class = serializers.CensusRunDetailSerializer
    queryset = CensusRun.objects.all()

    def get_queryset(self):
        """Filter runs by q and group."""
        q = self.request.query_params.get('q')
        group = self.request.query_params.get('group')
        queryset = self.queryset
        if q:
            try:
                queryset = queryset.filter(q=int(q))
            except ValueError:
                raise ValidationError({'q': 'q must be an integer.'})
        if group:
            queryset = queryset.filter(group=group)

        return queryset.order_by('-id')

    def get_serializer_class(self):
        """Return the serializer class for request."""
        if self.action == 'list':
            return serializers.CensusRunSerializer

        return self.serializer_class
