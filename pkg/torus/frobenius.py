"""
Finite tori T^{wF} and their characters.

For a Weyl group element w the w-twisted Frobenius acts on the cocharacter
lattice X_* = Z^r by F_w = q * tau * w, and T^{wF} is the cokernel of
F_w - 1. With the Smith form U (F_w - 1) V = diag(d_1, ..., d_r) the map
x -> U x identifies the cokernel with Z/d_1 + ... + Z/d_r.

A character is a tuple (a_1, ..., a_r) with a_i in Z/d_i. It is transported
to the row vector phi = sum_i (a_i / d_i) U[i, :] in Hom(X_*, Q/Z); phi is
fixed by F_w in the sense phi F_w = phi mod Z^r, and the W-action on such
vectors is phi -> phi x^-1. This transport is the fixed trivialization of
roots of unity used throughout.
"""

import itertools
import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache

from django.core.exceptions import ValidationError
from sympy import factorint

from algebra.exceptions import DatumError, InvalidModulusError
from algebra.finite_fields import validate_prime
from algebra.matrices import IntMatrix, smith_normal_form

from .validators import validate_prime_power

logger = logging.getLogger(__name__)

CHARACTER_ENCODING = "a_i in Z/d_i; phi = sum_i (a_i/d_i) U_i in Hom(X_*, Q/Z)"


@dataclass(frozen=True)
class FrobeniusDatum:
    datum: object
    q: int
    p: int
    tau_matrix: IntMatrix
    delta: int

    @property
    def rank(self):
        return self.datum.rank

    @property
    def is_split(self):
        return self.tau_matrix.is_identity()


def frobenius_datum(datum, q, delta=None):
    """
    Attach the Frobenius of an F_q-structure to a root datum.

    Raises:
        ValidationError: If q is not a prime power or ``delta`` is not a
            multiple of the order of tau.
    """
    validate_prime_power(q)
    (p,) = factorint(q)
    if delta is None:
        delta = datum.delta
    elif delta < 1 or delta % datum.delta:
        raise ValidationError(
            f"delta={delta} must be a positive multiple of the order {datum.delta} of tau.",
            code="invalid_delta",
        )
    return FrobeniusDatum(datum=datum, q=q, p=p, tau_matrix=datum.tau_matrix, delta=delta)


def reduce_mod_one(values):
    return tuple(Fraction(x) % 1 for x in values)


@dataclass(frozen=True)
class FixedTorus:
    w: object
    fd: FrobeniusDatum
    frobenius: IntMatrix
    invariants: tuple
    U: IntMatrix = field(repr=False)
    V: IntMatrix = field(repr=False)

    @property
    def order(self):
        return math.prod(self.invariants)

    @cached_property
    def U_inverse(self):
        return self.U.inverse()

    def character(self, values):
        return TorusCharacter(self, tuple(a % d for a, d in zip(values, self.invariants)))

    def phi(self, values):
        """The point of Hom(X_*, Q/Z) attached to the character ``values``."""
        r = self.fd.rank
        total = [Fraction(0)] * r
        for i, (a, d) in enumerate(zip(values, self.invariants)):
            if a:
                row = self.U.row(i)
                for j in range(r):
                    total[j] += Fraction(a * row[j], d)
        return reduce_mod_one(total)

    def character_from_phi(self, phi):
        """
        Inverse of ``phi``.

        Raises:
            DatumError: If ``phi`` is not fixed by F_w.
        """
        inverse = self.U_inverse
        values = []
        for i, d in enumerate(self.invariants):
            coordinate = sum(phi[j] * inverse[j, i] for j in range(len(phi))) * d
            if coordinate.denominator != 1:
                raise DatumError(f"{phi} is not a character of T^wF for w={self.w}.")
            values.append(int(coordinate) % d)
        return TorusCharacter(self, tuple(values))

    def contains(self, phi):
        """Whether ``phi`` is fixed by F_w."""
        image = [
            sum(phi[i] * self.frobenius[i, j] for i in range(len(phi)))
            for j in range(len(phi))
        ]
        return reduce_mod_one(image) == reduce_mod_one(phi)


@dataclass(frozen=True)
class TorusCharacter:
    torus: FixedTorus = field(compare=False, repr=False)
    values: tuple

    @property
    def w(self):
        return self.torus.w

    @property
    def order(self):
        orders = [d // math.gcd(a, d) for a, d in zip(self.values, self.torus.invariants)]
        return math.lcm(*orders) if orders else 1

    def is_trivial(self):
        return not any(self.values)

    @cached_property
    def phi(self):
        return self.torus.phi(self.values)

    def power(self, k):
        return self.torus.character(tuple(a * k for a in self.values))

    def __mul__(self, other):
        return self.torus.character(tuple(a + b for a, b in zip(self.values, other.values)))


def frobenius_matrix(w, fd):
    """F_w = q * tau * w on X_*."""
    return (fd.tau_matrix * fd.q) @ w.matrix


@lru_cache(maxsize=4096)
def fixed_torus(w, fd):
    """
    T^{wF} as the cokernel of q tau w - 1.

    Raises:
        DatumError: If q tau w - 1 is singular.
    """
    frobenius = frobenius_matrix(w, fd)
    m = frobenius - IntMatrix.identity(fd.rank)
    if m.det() == 0:
        raise DatumError(f"q*tau*w - 1 is singular for w={w}.", w=str(w))
    form = smith_normal_form(m)
    logger.debug(f"T^wF for w={w}, q={fd.q}: invariants {form.invariant_factors}")
    return FixedTorus(
        w=w,
        fd=fd,
        frobenius=frobenius,
        invariants=tuple(int(d) for d in form.invariant_factors),
        U=form.U,
        V=form.V,
    )


def characters(t):
    """All characters of T^{wF}, in lexicographic order of their values."""
    return [
        TorusCharacter(t, values)
        for values in itertools.product(*(range(d) for d in t.invariants))
    ]


def _prime_part(n, ell):
    part = 1
    while n % ell == 0:
        n //= ell
        part *= ell
    return part


def ell_part_split(chi, ell):
    """
    The unique factorization chi = chi_l * chi_l' with chi_l of l-power
    order and chi_l' of order prime to l.

    Raises:
        InvalidModulusError: If l is not a prime or equals the
            characteristic p.
    """
    validate_prime(ell)
    if ell == chi.torus.fd.p:
        raise InvalidModulusError(
            f"l={ell} equals the characteristic of q={chi.torus.fd.q}.", ell=ell
        )
    order = chi.order
    ell_part = _prime_part(order, ell)
    rest = order // ell_part
    if rest == 1:
        return chi, chi.power(0)
    if ell_part == 1:
        return chi.power(0), chi
    # e = 1 mod ell_part and e = 0 mod rest
    e = rest * pow(rest, -1, ell_part) % order
    return chi.power(e), chi.power(1 - e + order)


def ell_power_characters(t, ell):
    """Characters of T^{wF} of l-power order, i.e. those with trivial l'-part."""
    return [chi for chi in characters(t) if _prime_part(chi.order, ell) == chi.order]


def is_modular(chi, ell):
    """Whether ``chi`` takes values in F_l-bar, i.e. has order prime to l."""
    return chi.order % ell != 0
