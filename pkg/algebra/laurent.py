"""
Exact Laurent polynomials in one variable ``v`` over the integers.

Coefficients are Python ints, so nothing ever overflows; the class is
immutable and hashable and can be used as a dictionary value or key.
"""

from fractions import Fraction
from types import MappingProxyType

from .exceptions import DomainError, UsageError
from .finite_fields import FFElem


class LaurentPoly:
    """An element of Z[v, v^-1], stored as exponent -> nonzero coefficient."""

    __slots__ = ("_coeffs", "_hash")

    def __init__(self, coefficients=None):
        coeffs = {}
        for exponent, value in (coefficients or {}).items():
            value = int(value)
            if value:
                coeffs[int(exponent)] = value
        self._coeffs = coeffs
        self._hash = None

    # ---- constructors -------------------------------------------------

    @classmethod
    def monomial(cls, exponent, coefficient=1):
        return cls({exponent: coefficient})

    @classmethod
    def constant(cls, value):
        return cls({0: value})

    @classmethod
    def from_dict(cls, data):
        """Parse the ``{"exponent": coefficient}`` form used in JSON output."""
        try:
            return cls({int(exp): int(coeff) for exp, coeff in data.items()})
        except (TypeError, ValueError, AttributeError) as exc:
            raise UsageError(f"Not a Laurent polynomial mapping: {data!r}") from exc

    @classmethod
    def coerce(cls, value):
        if isinstance(value, LaurentPoly):
            return value
        if isinstance(value, int):
            return cls.constant(value)
        return NotImplemented

    # ---- inspection ---------------------------------------------------

    @property
    def coefficients(self):
        return MappingProxyType(self._coeffs)

    def terms(self):
        """Return ``(exponent, coefficient)`` pairs by increasing exponent."""
        return sorted(self._coeffs.items())

    def coefficient(self, exponent):
        return self._coeffs.get(exponent, 0)

    def is_zero(self):
        return not self._coeffs

    def __bool__(self):
        return bool(self._coeffs)

    @property
    def max_degree(self):
        return max(self._coeffs) if self._coeffs else None

    @property
    def min_degree(self):
        return min(self._coeffs) if self._coeffs else None

    # ---- ring structure -----------------------------------------------

    def __add__(self, other):
        other = LaurentPoly.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        result = dict(self._coeffs)
        for exponent, value in other._coeffs.items():
            result[exponent] = result.get(exponent, 0) + value
        return LaurentPoly(result)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self._coeffs.items()})

    def __sub__(self, other):
        other = LaurentPoly.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = LaurentPoly.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = LaurentPoly.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        result = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                result[e1 + e2] = result.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(result)

    __rmul__ = __mul__

    def __pow__(self, exponent):
        if not isinstance(exponent, int) or exponent < 0:
            return NotImplemented
        result = ONE
        for _ in range(exponent):
            result = result * self
        return result

    def shift(self, n):
        """Multiply by ``v**n``."""
        return LaurentPoly({e + n: c for e, c in self._coeffs.items()})

    # ---- substitutions ------------------------------------------------

    def bar(self):
        """The involution v -> v^-1."""
        return LaurentPoly({-e: c for e, c in self._coeffs.items()})

    def b(self):
        """The involution v -> -v^-1."""
        return LaurentPoly(
            {-e: (-c if e % 2 else c) for e, c in self._coeffs.items()}
        )

    def evaluate(self, value):
        """
        Evaluate at an integer, a Fraction or a finite-field element.

        Raises:
            DomainError: If negative exponents occur and ``value`` is not a
                unit of the ring it lives in (an integer other than +-1, or
                zero anywhere).
        """
        has_negative = any(e < 0 for e in self._coeffs)

        if isinstance(value, FFElem):
            if has_negative and value.is_zero():
                raise DomainError("Cannot evaluate v^-1 at zero.")
            total = value.field_zero()
            for exponent, coeff in self._coeffs.items():
                total = total + (value**exponent) * coeff
            return total

        if isinstance(value, Fraction):
            if has_negative and value == 0:
                raise DomainError("Cannot evaluate v^-1 at zero.")
            return sum(
                (coeff * value**exponent for exponent, coeff in self._coeffs.items()),
                Fraction(0),
            )

        if not isinstance(value, int):
            raise DomainError(f"Unsupported evaluation point {value!r}.")
        if has_negative and value not in (1, -1):
            raise DomainError(
                f"Evaluation at {value} is not defined over Z with negative powers of v."
            )
        # +-1 is its own inverse.
        return sum(coeff * value ** abs(e) for e, coeff in self._coeffs.items())

    # ---- truncations --------------------------------------------------

    def restrict(self, keep):
        """Keep only the terms whose exponent satisfies ``keep``."""
        return LaurentPoly({e: c for e, c in self._coeffs.items() if keep(e)})

    def positive_part(self):
        return self.restrict(lambda e: e > 0)

    def negative_part(self):
        return self.restrict(lambda e: e < 0)

    def constant_term(self):
        return self._coeffs.get(0, 0)

    # ---- identity -----------------------------------------------------

    def __eq__(self, other):
        other = LaurentPoly.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._coeffs.items()))
        return self._hash

    def to_dict(self):
        return {str(e): c for e, c in self.terms()}

    def __repr__(self):
        return f"LaurentPoly({dict(self.terms())!r})"

    def __str__(self):
        if not self._coeffs:
            return "0"
        pieces = []
        for exponent, coeff in sorted(self._coeffs.items(), reverse=True):
            if exponent == 0:
                monomial = str(abs(coeff))
            else:
                power = "v" if exponent == 1 else f"v^{exponent}"
                monomial = power if abs(coeff) == 1 else f"{abs(coeff)}{power}"
            sign = "-" if coeff < 0 else "+"
            pieces.append((sign, monomial))
        first_sign, first = pieces[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, monomial in pieces[1:]:
            text += f" {sign} {monomial}"
        return text


ZERO = LaurentPoly()
ONE = LaurentPoly.constant(1)
V = LaurentPoly.monomial(1)
V_INV = LaurentPoly.monomial(-1)


def laurent_mul(a, b):
    """Convolution product of two Laurent polynomials."""
    return a * b


def substitute(f, rule, value=None):
    """
    Apply one of the ring maps ``bar``, ``b`` or ``eval`` to ``f``.

    ``bar`` sends v to v^-1, ``b`` sends v to -v^-1, and ``eval`` sends v
    to ``value`` and returns a scalar.
    """
    if rule == "bar":
        return f.bar()
    if rule == "b":
        return f.b()
    if rule == "eval":
        if value is None:
            raise UsageError("Evaluation needs a value.")
        return f.evaluate(value)
    raise UsageError(f"Unknown substitution rule {rule!r}.")
