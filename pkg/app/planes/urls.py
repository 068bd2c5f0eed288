"""
URL mappings for the planes app.
"""
from django.urls import (
    path,
    include,
)

from rest_framework.routers import DefaultRouter

from planes import views


router = DefaultRouter()
router.register('planes', views.PlaneViewSet, basename='plane')
router.register('censuses', views.CensusRunViewSet)

app_name = 'planes'

urlpatterns = [
    path('', include(router.urls)),
]
