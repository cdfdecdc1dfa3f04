from django.apps import AppConfig


class AlgebraConfig(AppConfig):
    name = "algebra"
