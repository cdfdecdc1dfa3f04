from django.conf import settings
from django.core.exceptions import ValidationError
from django.utils.translation import gettext_lazy as _
from sympy import factorint, isprime

# =====================
# CONFIGURATION CONSTANTS
# =====================

MAX_Q = getattr(settings, "HECKELAB_MAX_Q", 10**6)
MAX_ELL = getattr(settings, "HECKELAB_MAX_ELL", 10**6)

# =====================
# CUSTOM VALIDATORS
# =====================


def validate_prime_power(q):
    """
    Validate the size q of the base field.

    Raises:
        ValidationError: If q is not a prime power in range.
    """
    if isinstance(q, bool) or not isinstance(q, int) or q < 2:
        raise ValidationError(
            _("q must be an integer prime power, got %(q)s."),
            params={"q": q},
            code="invalid_q",
        )
    if q > MAX_Q:
        raise ValidationError(
            _("q=%(q)s exceeds the supported maximum %(max)s."),
            params={"q": q, "max": MAX_Q},
            code="q_too_large",
        )
    if len(factorint(q)) != 1:
        raise ValidationError(
            _("q=%(q)s is not a prime power."),
            params={"q": q},
            code="q_not_prime_power",
        )


def validate_ell(ell, q=None):
    """
    Validate the residue characteristic l, optionally against q.

    Raises:
        ValidationError: If l is not a prime or divides q.
    """
    if isinstance(ell, bool) or not isinstance(ell, int) or not isprime(ell):
        raise ValidationError(
            _("l must be a prime, got %(ell)s."),
            params={"ell": ell},
            code="ell_not_prime",
        )
    if ell > MAX_ELL:
        raise ValidationError(
            _("l=%(ell)s exceeds the supported maximum %(max)s."),
            params={"ell": ell, "max": MAX_ELL},
            code="ell_too_large",
        )
    if q is not None and q % ell == 0:
        raise ValidationError(
            _("l=%(ell)s must differ from the characteristic of q=%(q)s."),
            params={"ell": ell, "q": q},
            code="ell_equals_p",
        )
