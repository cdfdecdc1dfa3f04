"""
The generic Hecke algebra of a finite Weyl group in the standard basis.

We use the normalization H_w = v^l(w) T_w, so that for a simple reflection
s the right action is

    H_w H_s = H_ws                      if ws > w
    H_w H_s = H_ws + (v^-1 - v) H_w      if ws < w

and bar(H_s) = H_s^-1 = H_s + (v - v^-1).
"""

import logging

from algebra.exceptions import UsageError
from algebra.laurent import ONE, ZERO, LaurentPoly, V, V_INV

logger = logging.getLogger(__name__)

# v^-1 - v
QUADRATIC = V_INV - V


class HeckeElem:
    """A finite sum of standard basis elements with Laurent coefficients."""

    __slots__ = ("group", "_support")

    def __init__(self, group, support=None):
        self.group = group
        self._support = {}
        for w, c in (support or {}).items():
            c = LaurentPoly.coerce(c)
            if c:
                self._support[w] = c

    @classmethod
    def basis(cls, group, w):
        """The standard basis element H_w."""
        return cls(group, {w: ONE})

    @classmethod
    def unit(cls, group):
        return cls.basis(group, group.identity)

    @classmethod
    def zero(cls, group):
        return cls(group)

    @property
    def support(self):
        return dict(self._support)

    def coefficient(self, w):
        return self._support.get(w, ZERO)

    def items(self):
        """(element, coefficient) pairs in group order."""
        return sorted(self._support.items(), key=lambda item: item[0].index)

    def is_zero(self):
        return not self._support

    def _check(self, other):
        if not isinstance(other, HeckeElem) or other.group.key != self.group.key:
            raise UsageError("Hecke algebra elements come from different groups.")

    def __add__(self, other):
        self._check(other)
        result = dict(self._support)
        for w, c in other._support.items():
            result[w] = result.get(w, ZERO) + c
        return HeckeElem(self.group, result)

    def __neg__(self):
        return HeckeElem(self.group, {w: -c for w, c in self._support.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, scalar):
        """Multiply every coefficient by a Laurent polynomial or integer."""
        scalar = LaurentPoly.coerce(scalar)
        return HeckeElem(self.group, {w: c * scalar for w, c in self._support.items()})

    def map_coefficients(self, fn):
        return HeckeElem(self.group, {w: fn(c) for w, c in self._support.items()})

    def __mul__(self, other):
        if isinstance(other, HeckeElem):
            return mul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other):
        if not isinstance(other, HeckeElem):
            return NotImplemented
        return self.group.key == other.group.key and self._support == other._support

    def __hash__(self):
        return hash((self.group.key, frozenset(self._support.items())))

    def __repr__(self):
        return f"HeckeElem({self})"

    def __str__(self):
        if not self._support:
            return "0"
        return " + ".join(f"({c})H[{w}]" for w, c in self.items())


def right_mul_simple(h, i):
    """h * H_{s_i} for a 1-based generator index."""
    group = h.group
    result = {}
    for w, c in h._support.items():
        ws = group.right_multiply(w, i)
        result[ws] = result.get(ws, ZERO) + c
        if ws.length < w.length:
            result[w] = result.get(w, ZERO) + c * QUADRATIC
    return HeckeElem(group, result)


def left_mul_simple(i, h):
    """H_{s_i} * h for a 1-based generator index."""
    group = h.group
    result = {}
    for w, c in h._support.items():
        sw = group.left_multiply(i, w)
        result[sw] = result.get(sw, ZERO) + c
        if sw.length < w.length:
            result[w] = result.get(w, ZERO) + c * QUADRATIC
    return HeckeElem(group, result)


def mul(h1, h2):
    """
    Product in the Hecke algebra.

    Raises:
        UsageError: If the factors belong to different groups.
    """
    h1._check(h2)
    total = HeckeElem.zero(h1.group)
    for y, c in h2.items():
        partial = h1.scale(c)
        for i in y.word:
            partial = right_mul_simple(partial, i)
        total = total + partial
    return total


def _bar_simple_right(h, i):
    """h * bar(H_{s_i}) = h H_{s_i} + (v - v^-1) h."""
    return right_mul_simple(h, i) - h.scale(QUADRATIC)


_BAR_CACHE = {}


def bar_standard(group, w):
    """bar(H_w) = H_{w^-1}^-1, expanded in the standard basis."""
    key = (group.key, w.index)
    if key not in _BAR_CACHE:
        if w.is_identity():
            image = HeckeElem.unit(group)
        else:
            prefix = group.element(w.word[:-1])
            image = _bar_simple_right(bar_standard(group, prefix), w.word[-1])
        _BAR_CACHE[key] = image
    return _BAR_CACHE[key]


def bar(h):
    """The bar involution: v -> v^-1 and H_w -> H_{w^-1}^-1."""
    total = HeckeElem.zero(h.group)
    for w, c in h.items():
        total = total + bar_standard(h.group, w).scale(c.bar())
    return total


def invol_a(h):
    """The ring involution fixing v with a(H_x) = (-1)^l(x) H_{x^-1}^-1."""
    total = HeckeElem.zero(h.group)
    for w, c in h.items():
        sign = -1 if w.length % 2 else 1
        total = total + bar_standard(h.group, w).scale(c * sign)
    return total


def invol_b(h):
    """The involution fixing every H_w with v -> -v^-1 on coefficients."""
    return h.map_coefficients(LaurentPoly.b)


def std_inverse(w, group):
    """H_w^-1, which is bar(H_{w^-1})."""
    return bar_standard(group, group.invert(w))

