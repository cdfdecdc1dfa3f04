from django.conf import settings
from django.core.exceptions import ValidationError
from django.utils.translation import gettext_lazy as _
from sympy import factorint

# =====================
# CONFIGURATION CONSTANTS
# =====================

COMMANDS = ("group", "kl", "torus", "series", "monokl", "duality", "trcheck", "dudasmalle")
NEEDS_Q = ("torus", "series", "monokl", "dudasmalle")
NEEDS_ELL = ("dudasmalle",)
OUTPUT_FORMATS = ("json", "csv", "text")
MAX_WORKERS = getattr(settings, "HECKELAB_MAX_WORKERS", 64)
MAX_MULTIPLICITY = 10**4

# =====================
# CUSTOM VALIDATORS
# =====================


def validate_workers(workers):
    """
    Validate the thread count for per-element fan-out.

    Raises:
        ValidationError: If the count is not between 1 and MAX_WORKERS.
    """
    if not 1 <= workers <= MAX_WORKERS:
        raise ValidationError(
            _("workers must lie between 1 and %(max)s, got %(workers)s."),
            params={"workers": workers, "max": MAX_WORKERS},
            code="invalid_workers",
        )


def validate_multiplicity(n):
    """
    Validate one decomposition multiplicity.

    Raises:
        ValidationError: If n is negative or unreasonably large.
    """
    if n < 0:
        raise ValidationError(
            _("Multiplicities are non-negative, got %(n)s."),
            params={"n": n},
            code="negative_multiplicity",
        )
    if n > MAX_MULTIPLICITY:
        raise ValidationError(
            _("Multiplicity %(n)s exceeds %(max)s."),
            params={"n": n, "max": MAX_MULTIPLICITY},
            code="multiplicity_too_large",
        )


def validate_bruhat_pair(v, w, group):
    """
    Validate that v < w strictly in the Bruhat order.

    Raises:
        ValidationError: If v is not strictly below w.
    """
    if not group.bruhat_lt(v, w):
        raise ValidationError(
            _("%(v)s is not strictly below %(w)s in the Bruhat order."),
            params={"v": str(v), "w": str(w)},
            code="not_bruhat_below",
        )


def validate_override_character(chi, ell):
    """
    Validate the character of an n-matrix override, already reduced
    modulo the invariant factors of its torus.

    Raises:
        ValidationError: If chi does not have l-power order.
    """
    if not set(factorint(chi.order)) <= {ell}:
        raise ValidationError(
            _("%(chi)s has order %(order)s on T^wF for w=%(w)s, not a power of l=%(ell)s."),
            params={"chi": list(chi.values), "order": chi.order, "w": str(chi.w), "ell": ell},
            code="override_not_ell_power",
        )
