from django.apps import AppConfig


class DlcharConfig(AppConfig):
    name = "dlchar"
