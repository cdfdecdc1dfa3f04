from django.apps import AppConfig


class HeckeConfig(AppConfig):
    name = "hecke"
