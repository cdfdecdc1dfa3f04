from fractions import Fraction

from rest_framework import serializers

from .exceptions import UsageError
from .laurent import LaurentPoly


class LaurentPolyField(serializers.Field):
    """A Laurent polynomial as an ``{"exponent": coefficient}`` mapping."""

    default_error_messages = {
        "invalid": "Expected a mapping of exponents to integer coefficients.",
    }

    def to_representation(self, value):
        return value.to_dict()

    def to_internal_value(self, data):
        if not isinstance(data, dict):
            self.fail("invalid")
        try:
            return LaurentPoly.from_dict(data)
        except UsageError:
            self.fail("invalid")


class FractionField(serializers.Field):
    """A rational number as the string ``"a/b"`` (or ``"a"`` when integral)."""

    def to_representation(self, value):
        return str(Fraction(value))

    def to_internal_value(self, data):
        try:
            return Fraction(str(data))
        except (ValueError, ZeroDivisionError):
            raise serializers.ValidationError(f"{data!r} is not a rational number.")


class FFElemField(serializers.Field):
    """Finite-field elements are written as in ``str(FFElem)``, read-only."""

    def to_representation(self, value):
        return str(value)

    def to_internal_value(self, data):
        raise serializers.ValidationError("Finite-field elements are output only.")
