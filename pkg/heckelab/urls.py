"""
URL configuration for the heckelab project.

The computation API is read-only and mirrors the management commands:
``GET api/compute/<command>/?preset=A2&q=3`` returns the same artifact as
``python manage.py <command> --preset A2 --q 3 --format json``.
"""

from django.urls import include, path

urlpatterns = [
    path("api/", include("cli.urls")),
]
