"""
The monodromic Hecke algebra, one block per geometric class.

A block is spanned by H_w 1_phi for w in W and phi in the W-orbit of the
class's point, with H_w 1_phi = 1_{w phi} H_w and the idempotents
orthogonal. With e_s the sum of the 1_phi fixed by s, the quadratic
relation is H_s^2 = 1 + (v^-1 - v) H_s e_s, so on the trivial class the
block is the Hecke algebra itself and on a free orbit H_s 1_{s phi} H_s 1_phi = 1_phi.
"""

import logging
from dataclasses import dataclass, field

from algebra.exceptions import UsageError
from algebra.laurent import ONE, ZERO, LaurentPoly
from hecke.algebra import QUADRATIC
from torus.series import act, w_orbit

logger = logging.getLogger(__name__)


@dataclass
class MonoBlock:
    """Basis and stabilizer data of the block attached to a geometric class."""

    geom_class: object
    group: object
    orbit: tuple
    stabilizers: dict = field(repr=False)
    _actions: dict = field(default_factory=dict, repr=False)
    _bar_cache: dict = field(default_factory=dict, repr=False)
    _kl_cache: dict = field(default_factory=dict, repr=False)

    @property
    def key(self):
        return (self.group.key, self.orbit[0])

    @property
    def basis(self):
        """Pairs (w, phi) ordered by w, then phi."""
        return [(w, phi) for w in self.group for phi in self.orbit]

    def __len__(self):
        return self.size

    @property
    def size(self):
        return self.group.order * len(self.orbit)

    def fixes(self, i, phi):
        """Whether the simple reflection s_i fixes phi."""
        return self.stabilizers[(i, phi)]

    def reflect(self, i, phi):
        return act(phi, self.group.datum.reflection_matrices[i - 1])

    def act(self, x, phi):
        """x phi = phi x^-1."""
        key = (x.index, phi)
        if key not in self._actions:
            self._actions[key] = act(phi, self.group.invert(x).matrix)
        return self._actions[key]

    def is_trivial(self):
        return not any(self.orbit[0])


def block_basis(geom_class, group):
    """The block of ``geom_class`` with its stabilizer data."""
    orbit = tuple(sorted(w_orbit(geom_class.phi, group)))
    reflections = group.datum.reflection_matrices
    stabilizers = {
        (i + 1, phi): act(phi, s) == phi
        for i, s in enumerate(reflections)
        for phi in orbit
    }
    logger.debug(
        f"Block {geom_class.position}: orbit of size {len(orbit)}, {group.order * len(orbit)} basis elements"
    )
    return MonoBlock(geom_class=geom_class, group=group, orbit=orbit, stabilizers=stabilizers)


class MonoElem:
    """A finite sum of H_w 1_phi inside one block."""

    __slots__ = ("block", "_support")

    def __init__(self, block, support=None):
        self.block = block
        self._support = {}
        for key, c in (support or {}).items():
            c = LaurentPoly.coerce(c)
            if c:
                self._support[key] = c

    @classmethod
    def basis(cls, block, w, phi):
        return cls(block, {(w, phi): ONE})

    @classmethod
    def idempotent(cls, block, phi):
        return cls.basis(block, block.group.identity, phi)

    @classmethod
    def unit(cls, block):
        return cls(block, {(block.group.identity, phi): ONE for phi in block.orbit})

    @property
    def support(self):
        return dict(self._support)

    def coefficient(self, w, phi):
        return self._support.get((w, phi), ZERO)

    def items(self):
        return sorted(self._support.items(), key=lambda item: (item[0][0].index, item[0][1]))

    def is_zero(self):
        return not self._support

    def _check(self, other):
        if not isinstance(other, MonoElem) or other.block.key != self.block.key:
            raise UsageError("Monodromic elements come from different blocks.")

    def __add__(self, other):
        self._check(other)
        result = dict(self._support)
        for key, c in other._support.items():
            result[key] = result.get(key, ZERO) + c
        return MonoElem(self.block, result)

    def __neg__(self):
        return MonoElem(self.block, {k: -c for k, c in self._support.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, scalar):
        scalar = LaurentPoly.coerce(scalar)
        return MonoElem(self.block, {k: c * scalar for k, c in self._support.items()})

    def map_coefficients(self, fn):
        return MonoElem(self.block, {k: fn(c) for k, c in self._support.items()})

    def __eq__(self, other):
        if not isinstance(other, MonoElem):
            return NotImplemented
        return self.block.key == other.block.key and self._support == other._support

    def __hash__(self):
        return hash((self.block.key, frozenset(self._support.items())))

    def __str__(self):
        if not self._support:
            return "0"
        return " + ".join(f"({c})H[{w}]1[{','.join(map(str, phi))}]" for (w, phi), c in self.items())

    __repr__ = __str__


def right_mul_generator(m, i):
    """m * H_{s_i}, where H_{s_i} is the sum of H_{s_i} 1_phi over the block."""
    block, group = m.block, m.block.group
    result = {}
    for (w, phi), c in m._support.items():
        psi = block.reflect(i, phi)
        ws = group.right_multiply(w, i)
        result[(ws, psi)] = result.get((ws, psi), ZERO) + c
        if ws.length < w.length and block.fixes(i, psi):
            result[(w, psi)] = result.get((w, psi), ZERO) + c * QUADRATIC
    return MonoElem(block, result)


def left_mul_generator(i, m, inverse=False):
    """
    H_{s_i} * m, or H_{s_i}^-1 * m = (H_{s_i} + (v - v^-1) e_s) * m when
    ``inverse`` is set.
    """
    block, group = m.block, m.block.group
    result = {}
    for (x, psi), c in m._support.items():
        sx = group.left_multiply(i, x)
        result[(sx, psi)] = result.get((sx, psi), ZERO) + c
        if sx.length < x.length and block.fixes(i, block.act(sx, psi)):
            result[(x, psi)] = result.get((x, psi), ZERO) + c * QUADRATIC
        if inverse and block.fixes(i, block.act(x, psi)):
            result[(x, psi)] = result.get((x, psi), ZERO) - c * QUADRATIC
    return MonoElem(block, result)


def project(m, phi):
    """m * 1_phi."""
    return MonoElem(m.block, {k: c for k, c in m._support.items() if k[1] == phi})


def mono_mul(m1, m2, permissive=False):
    """
    Product inside a block.

    Raises:
        UsageError: If the factors lie in different blocks, unless
            ``permissive`` is set, in which case the (zero) product is
            returned with a warning.
    """
    if m1.block.key != m2.block.key:
        if not permissive:
            raise UsageError("Products across blocks vanish; pass permissive=True to allow them.")
        logger.warning("Cross-block monodromic product returned as zero")
        return MonoElem(m1.block)
    total = MonoElem(m1.block)
    for (y, psi), c in m2.items():
        partial = m1.scale(c)
        for i in y.word:
            partial = right_mul_generator(partial, i)
        total = total + project(partial, psi)
    return total


def bar_basis(block, w, phi):
    """bar(H_w 1_phi) = H_{s_1}^-1 ... H_{s_k}^-1 1_phi for the canonical word of w."""
    key = (w.index, phi)
    if key not in block._bar_cache:
        image = MonoElem.idempotent(block, phi)
        for i in reversed(w.word):
            image = left_mul_generator(i, image, inverse=True)
        block._bar_cache[key] = image
    return block._bar_cache[key]


def mono_bar(m):
    """v -> v^-1 on coefficients and H_w 1_phi -> H_{w^-1}^-1 1_phi."""
    total = MonoElem(m.block)
    for (w, phi), c in m.items():
        total = total + bar_basis(m.block, w, phi).scale(c.bar())
    return total


def mono_b(m):
    """The scalar twist v -> -v^-1, fixing every H_w 1_phi."""
    return m.map_coefficients(LaurentPoly.b)


def from_hecke(block, h, phi=None):
    """h * 1_phi for a Hecke algebra element ``h`` and a point of the block."""
    phi = block.orbit[0] if phi is None else phi
    return MonoElem(block, {(w, phi): c for w, c in h.items()})
