"""
Formal uniform virtual characters.

A UniformVirtual is a Z[v, v^-1]-combination of symbols rho_{w, phi}, the
graded shadows of the Deligne-Lusztig classes R_w^theta. ``ch_map`` sends
H_w 1_phi to rho_{w, phi}; at v = 1 the symbol rho_y of the trivial
character becomes (-1)^l(y) R_y.

Class functions at v = 1 are vectors over the conjugacy classes of W, the
entry of a class C being the coefficient of R_C.
"""

import logging
from fractions import Fraction

from algebra.exceptions import UnsupportedError, UsageError
from algebra.laurent import ZERO, LaurentPoly
from coxeter.characters import char_table
from hecke.algebra import HeckeElem
from monodromic.algebra import MonoElem

logger = logging.getLogger(__name__)


class UniformVirtual:
    """A finite sum c * rho_{w, phi} keyed by (WeylElem, phi)."""

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        self._terms = {}
        for key, c in (terms or {}).items():
            c = LaurentPoly.coerce(c)
            if c:
                self._terms[key] = c

    @property
    def terms(self):
        return dict(self._terms)

    def coefficient(self, w, phi):
        return self._terms.get((w, tuple(phi)), ZERO)

    def items(self):
        return sorted(self._terms.items(), key=lambda item: (item[0][0].index, item[0][1]))

    def is_zero(self):
        return not self._terms

    def exponents(self):
        """Every v-exponent occurring in some coefficient."""
        return sorted({e for c in self._terms.values() for e, _ in c.terms()})

    def restrict(self, keep):
        """Keep the monomials whose exponent satisfies ``keep``."""
        return UniformVirtual({k: c.restrict(keep) for k, c in self._terms.items()})

    def __add__(self, other):
        result = dict(self._terms)
        for key, c in other._terms.items():
            result[key] = result.get(key, ZERO) + c
        return UniformVirtual(result)

    def __neg__(self):
        return UniformVirtual({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, scalar):
        scalar = LaurentPoly.coerce(scalar)
        return UniformVirtual({k: c * scalar for k, c in self._terms.items()})

    def __eq__(self, other):
        if not isinstance(other, UniformVirtual):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __str__(self):
        if not self._terms:
            return "0"
        pieces = []
        for (w, phi), c in self.items():
            label = str(w) if not any(phi) else f"{w},{'/'.join(map(str, phi))}"
            pieces.append(f"({c})rho[{label}]")
        return " + ".join(pieces)

    __repr__ = __str__


def ch_map(c):
    """
    ch(H_{w, phi}) = rho_{w, phi}, extended linearly.

    Accepts a K0Class, a HeckeElem (trivial character) or a MonoElem.
    """
    element = getattr(c, "element", c)
    if isinstance(element, HeckeElem):
        trivial = tuple(Fraction(0) for _ in range(element.group.datum.rank))
        return UniformVirtual({(w, trivial): coeff for w, coeff in element.items()})
    if isinstance(element, MonoElem):
        return UniformVirtual({(w, tuple(phi)): coeff for (w, phi), coeff in element.items()})
    raise UsageError(f"Cannot take the character of {type(element).__name__}.")


def alvis_curtis(u):
    """d(v^n rho_w) = (-1)^l(w) v^-n rho_w."""
    return UniformVirtual(
        {
            (w, phi): c.bar() if w.length % 2 == 0 else -c.bar()
            for (w, phi), c in u.items()
        }
    )


def _require_split(group):
    if not group.datum.is_split:
        raise UnsupportedError(
            f"Traces at v=1 are only available for split data; {group.datum.label} is twisted."
        )


def class_function(group, values):
    """A vector over the conjugacy classes of ``group`` from a {position: value} mapping."""
    size = len(group.conjugacy_classes())
    return tuple(Fraction(values.get(i, 0)) for i in range(size))


def specialize(u, group):
    """
    The class function of a unipotent UniformVirtual at v = 1, with
    rho_y -> (-1)^l(y) R_y.

    Raises:
        UsageError: If ``u`` involves a non-trivial character.
    """
    values = {}
    for (y, phi), c in u.items():
        if any(phi):
            raise UsageError("Only unipotent virtual characters specialize to class functions of W.")
        sign = -1 if y.length % 2 else 1
        position = group.class_of(y)
        values[position] = values.get(position, 0) + sign * c.evaluate(1)
    return class_function(group, values)


def group_ring_at_one(h):
    """h at v = 1 as a {WeylElem: int} element of Z[W]."""
    return {w: c.evaluate(1) for w, c in h.items()}


def tr_map(h):
    """
    tr(h) at v = 1: sum over irreducible E of tr(h(1), E) R_E, where
    R_E = |W|^-1 sum_w tr(w, E) R_w.

    Raises:
        UnsupportedError: For twisted data.
    """
    group = h.group
    _require_split(group)
    table = char_table(group)
    sizes = [klass.size for klass in table.classes]
    at_one = group_ring_at_one(h)
    traces = [
        sum(c * row[group.class_of(y)] for y, c in at_one.items())
        for row in table.values
    ]
    values = {
        position: sum(
            Fraction(trace * row[position] * sizes[position], group.order)
            for trace, row in zip(traces, table.values)
        )
        for position in range(len(sizes))
    }
    logger.debug(f"tr at v=1 over {len(sizes)} classes of W({group.datum.label})")
    return class_function(group, values)
