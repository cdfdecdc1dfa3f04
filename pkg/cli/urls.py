from django.urls import include, path
from rest_framework.routers import DefaultRouter

from .views import ComputeViewSet

router = DefaultRouter()
router.register(r"compute", ComputeViewSet, basename="compute")

urlpatterns = [
    path("", include(router.urls)),
]
