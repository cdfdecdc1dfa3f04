"""
Exception hierarchy shared by every heckelab app.

Each class carries a machine-readable ``code`` (mirroring the ``code=`` of
Django validation errors) and the process ``exit_code`` the management
commands use when the error escapes a computation.
"""


class HeckeLabError(Exception):
    """Base class for all computation errors."""

    code = "heckelab_error"
    exit_code = 1

    def __init__(self, message, **params):
        super().__init__(message)
        self.message = message
        self.params = params

    def __str__(self):
        return self.message


class DomainError(HeckeLabError, ValueError):
    """An operation was applied outside its mathematical domain."""

    code = "domain_error"


class InvalidModulusError(HeckeLabError, ValueError):
    """The residue characteristic clashes with the defining characteristic."""

    code = "invalid_modulus"


class DatumError(HeckeLabError, ValueError):
    """A root datum or Frobenius datum is inconsistent."""

    code = "invalid_datum"


class InfiniteGroupError(DatumError):
    """Weyl group enumeration exceeded the configured element cap."""

    code = "infinite_group"


class UsageError(HeckeLabError):
    """Operands from different groups or blocks were combined."""

    code = "usage_error"


class IdentityViolation(HeckeLabError):
    """A checked identity failed to hold exactly."""

    code = "identity_violation"
    exit_code = 2


class GatedFeatureError(HeckeLabError):
    """A conjectural feature was requested without opting in."""

    code = "gated_feature"
    exit_code = 3


class OracleRangeError(HeckeLabError):
    """A brute-force oracle was asked to enumerate past its cap."""

    code = "oracle_out_of_range"


class UnsupportedError(HeckeLabError):
    """The routine only handles split data."""

    code = "unsupported"
