from django.apps import AppConfig


class MonodromicConfig(AppConfig):
    name = "monodromic"
