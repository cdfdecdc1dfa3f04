"""
Arithmetic in F_l and F_{l^2}, enough to reduce square roots of q mod l.

F_{l^2} is realised as F_l[a]/(a^2 - n) with n the least quadratic
non-residue for odd l, and as F_2[a]/(a^2 - a - 1) for l = 2. An element is
the pair (c0, c1) meaning c0 + c1*a; its degree is 1 exactly when c1 = 0.
"""

from functools import lru_cache

from sympy import factorint, isprime
from sympy.ntheory import is_quad_residue, sqrt_mod

from .exceptions import DomainError, InvalidModulusError, UsageError


@lru_cache(maxsize=None)
def least_nonresidue(ell):
    """Smallest quadratic non-residue modulo the odd prime ``ell``."""
    for candidate in range(2, ell):
        if not is_quad_residue(candidate, ell):
            return candidate
    raise InvalidModulusError(f"{ell} has no quadratic non-residue.")


@lru_cache(maxsize=None)
def quadratic_modulus(ell):
    """Return (m0, m1) with a^2 = m0 + m1*a in F_{ell^2}."""
    if ell == 2:
        return (1, 1)
    return (least_nonresidue(ell), 0)


def validate_prime(ell):
    if not isinstance(ell, int) or not isprime(ell):
        raise InvalidModulusError(f"{ell!r} is not a prime.", ell=ell)


class FFElem:
    """An element of F_l or of its quadratic extension."""

    __slots__ = ("ell", "c0", "c1")

    def __init__(self, ell, c0, c1=0):
        self.ell = ell
        self.c0 = c0 % ell
        self.c1 = c1 % ell

    @classmethod
    def scalar(cls, ell, value):
        return cls(ell, value, 0)

    @property
    def degree(self):
        return 2 if self.c1 else 1

    def is_zero(self):
        return self.c0 == 0 and self.c1 == 0

    def field_zero(self):
        return FFElem(self.ell, 0)

    def field_one(self):
        return FFElem(self.ell, 1)

    def _coerce(self, other):
        if isinstance(other, FFElem):
            if other.ell != self.ell:
                raise UsageError(
                    f"Cannot combine elements of characteristic {self.ell} and {other.ell}."
                )
            return other
        if isinstance(other, int):
            return FFElem(self.ell, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FFElem(self.ell, self.c0 + other.c0, self.c1 + other.c1)

    __radd__ = __add__

    def __neg__(self):
        return FFElem(self.ell, -self.c0, -self.c1)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        m0, m1 = quadratic_modulus(self.ell)
        top = self.c1 * other.c1
        return FFElem(
            self.ell,
            self.c0 * other.c0 + top * m0,
            self.c0 * other.c1 + self.c1 * other.c0 + top * m1,
        )

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise DomainError("Zero has no inverse.")
        # the multiplicative group of F_{l^2} has order l^2 - 1
        return self ** (self.ell**2 - 2)

    def __pow__(self, exponent):
        if not isinstance(exponent, int):
            return NotImplemented
        base = self
        if exponent < 0:
            base, exponent = self.inverse(), -exponent
        result = self.field_one()
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def sort_key(self):
        return (self.c0, self.c1)

    def __eq__(self, other):
        if isinstance(other, int):
            other = FFElem(self.ell, other)
        if not isinstance(other, FFElem):
            return NotImplemented
        return (self.ell, self.c0, self.c1) == (other.ell, other.c0, other.c1)

    def __hash__(self):
        return hash((self.ell, self.c0, self.c1))

    def __repr__(self):
        return f"FFElem(ell={self.ell}, c0={self.c0}, c1={self.c1})"

    def __str__(self):
        if not self.c1:
            return str(self.c0)
        linear = "a" if self.c1 == 1 else f"{self.c1}*a"
        return linear if not self.c0 else f"{self.c0}+{linear}"


def ff_sqrt(q, ell):
    """
    Canonical square root of ``q`` modulo the prime ``ell``.

    The root lies in F_ell when q is a square there and in F_{ell^2}
    otherwise; of the two roots x, -x the lexicographically least pair
    (c0, c1) is returned.

    Raises:
        InvalidModulusError: If ``ell`` is not prime or divides ``q``.
    """
    validate_prime(ell)
    if q % ell == 0:
        raise InvalidModulusError(
            f"l={ell} divides q={q}; no square root mod l is available.",
            q=q,
            ell=ell,
        )
    if ell == 2:
        return FFElem(2, 1)

    residue = q % ell
    if is_quad_residue(residue, ell):
        return FFElem(ell, min(sqrt_mod(residue, ell, all_roots=True)))

    # residue = c^2 * n with c in F_ell, so the root is c*a
    n = least_nonresidue(ell)
    ratio = residue * pow(n, -1, ell) % ell
    return FFElem(ell, 0, min(sqrt_mod(ratio, ell, all_roots=True)))


def ff_order(x):
    """
    Multiplicative order of ``x``.

    Raises:
        DomainError: If ``x`` is zero.
    """
    if x.is_zero():
        raise DomainError("Zero has no multiplicative order.")
    group_order = x.ell**x.degree - 1
    order = group_order
    for prime in factorint(group_order):
        while order % prime == 0 and x ** (order // prime) == 1:
            order //= prime
    return order
