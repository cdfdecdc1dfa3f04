"""
Django settings for the heckelab project.

Every tunable is read from the environment (or a ``.env`` file) through
python-decouple, so the management commands run without any local setup.

For the full list of Django settings and their values, see
https://docs.djangoproject.com/en/6.0/ref/settings/
"""

from pathlib import Path

from decouple import config

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

# SECURITY WARNING: keep the secret key used in production secret!
SECRET_KEY = config(
    "SECRET_KEY",
    default="django-insecure-heckelab-local-only-4v8q2m0z7c1x9b5n3k6j",
)

# SECURITY WARNING: don't run with debug turned on in production!
DEBUG = config("DEBUG", default=False, cast=bool)

ALLOWED_HOSTS = config(
    "ALLOWED_HOSTS",
    default="localhost,127.0.0.1,testserver",
    cast=lambda value: [host.strip() for host in value.split(",") if host.strip()],
)

# Application definition

INSTALLED_APPS = [
    "django.contrib.contenttypes",
    "django.contrib.auth",
    "rest_framework",
    "algebra.apps.AlgebraConfig",
    "coxeter.apps.CoxeterConfig",
    "hecke.apps.HeckeConfig",
    "torus.apps.TorusConfig",
    "monodromic.apps.MonodromicConfig",
    "dlchar.apps.DlcharConfig",
    "cli.apps.CliConfig",
]

MIDDLEWARE = [
    "django.middleware.security.SecurityMiddleware",
    "django.middleware.common.CommonMiddleware",
]

ROOT_URLCONF = "heckelab.urls"

TEMPLATES = [
    {
        "BACKEND": "django.template.backends.django.DjangoTemplates",
        "DIRS": [],
        "APP_DIRS": True,
        "OPTIONS": {
            "context_processors": [
                "django.template.context_processors.request",
            ],
        },
    },
]

WSGI_APPLICATION = "heckelab.wsgi.application"

# No app owns database models; tests run on SimpleTestCase.
DATABASES = {}


# Caches
# The "kltables" alias memoizes Kazhdan-Lusztig tables between runs.

HECKELAB_CACHE_DIR = config("HECKELAB_CACHE_DIR", default="")

CACHES = {
    "default": {
        "BACKEND": "django.core.cache.backends.locmem.LocMemCache",
    },
    "kltables": (
        {
            "BACKEND": "django.core.cache.backends.filebased.FileBasedCache",
            "LOCATION": HECKELAB_CACHE_DIR,
            "TIMEOUT": None,
        }
        if HECKELAB_CACHE_DIR
        else {"BACKEND": "django.core.cache.backends.dummy.DummyCache"}
    ),
}


# Computation caps

HECKELAB_ELEMENT_CAP = config("HECKELAB_ELEMENT_CAP", default=5000, cast=int)
HECKELAB_MAX_CHAR_TABLE_ORDER = config(
    "HECKELAB_MAX_CHAR_TABLE_ORDER", default=1152, cast=int
)
HECKELAB_ORACLE_CAP = config("HECKELAB_ORACLE_CAP", default=2_000_000, cast=int)
HECKELAB_WORKERS = config("HECKELAB_WORKERS", default=1, cast=int)
HECKELAB_PRESETS_FILE = config("HECKELAB_PRESETS_FILE", default="")


# Django REST framework

REST_FRAMEWORK = {
    "DEFAULT_AUTHENTICATION_CLASSES": [],
    "DEFAULT_PERMISSION_CLASSES": ["cli.permissions.IsReadOnly"],
    "DEFAULT_RENDERER_CLASSES": ["rest_framework.renderers.JSONRenderer"],
    "UNAUTHENTICATED_USER": None,
}


# Logging
# stdout carries rendered artifacts only, so every handler writes to stderr.

HECKELAB_LOG_LEVEL = config("HECKELAB_LOG_LEVEL", default="WARNING")

LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "verbose": {
            "format": "{asctime} {levelname} {name} {message}",
            "style": "{",
        },
    },
    "handlers": {
        "console": {
            "class": "logging.StreamHandler",
            "formatter": "verbose",
            "stream": "ext://sys.stderr",
        },
    },
    "loggers": {
        app: {
            "handlers": ["console"],
            "level": HECKELAB_LOG_LEVEL,
            "propagate": False,
        }
        for app in (
            "algebra",
            "coxeter",
            "hecke",
            "torus",
            "monodromic",
            "dlchar",
            "cli",
        )
    },
}


# Internationalization
# https://docs.djangoproject.com/en/6.0/topics/i18n/

LANGUAGE_CODE = "en-us"

TIME_ZONE = "UTC"

USE_I18N = True

USE_TZ = True
