from django.apps import AppConfig


class TorusConfig(AppConfig):
    name = "torus"
