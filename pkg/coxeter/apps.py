from django.apps import AppConfig


class CoxeterConfig(AppConfig):
    name = "coxeter"
