"""
Geometric conjugacy classes of pairs (w, chi).

A pair (w, chi) is sent to its point phi in Hom(X_*, Q/Z); two pairs are
geometrically conjugate when their points lie in one W-orbit. Classes are
listed by the lexicographically least point of the orbit, so the class of
the trivial characters comes first.
"""

import logging
from dataclasses import dataclass

from coxeter.groups import build_group

from .frobenius import (
    characters,
    ell_part_split,
    fixed_torus,
    is_modular,
    reduce_mod_one,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GeomClass:
    position: int
    phi: tuple
    members: tuple

    @property
    def representative(self):
        return self.members[0]

    @property
    def size(self):
        return len(self.members)

    def is_unipotent(self):
        return not any(self.phi)


def act(phi, matrix):
    """phi -> phi * matrix on row vectors, reduced mod Z."""
    n = len(phi)
    return reduce_mod_one(
        sum(phi[i] * matrix[i, j] for i in range(n)) for j in range(n)
    )


def w_orbit(phi, group):
    """The orbit of ``phi`` under phi -> phi x^-1, generated by the simple reflections."""
    reflections = group.datum.reflection_matrices
    orbit = {phi}
    frontier = [phi]
    while frontier:
        current = frontier.pop()
        for s in reflections:
            image = act(current, s)
            if image not in orbit:
                orbit.add(image)
                frontier.append(image)
    return orbit


class SeriesTable:
    """All pairs (w, chi) of a Frobenius datum grouped into geometric classes."""

    def __init__(self, fd, group=None, modular_ell=None):
        self.fd = fd
        self.group = group or build_group(fd.datum)
        self.modular_ell = modular_ell
        self.classes = self._build()
        self._index = {
            (chi.w, chi.values): klass.position
            for klass in self.classes
            for chi in klass.members
        }

    def _pairs(self):
        for w in self.group:
            torus = fixed_torus(w, self.fd)
            for chi in characters(torus):
                if self.modular_ell is None or is_modular(chi, self.modular_ell):
                    yield chi

    def _build(self):
        by_phi = {}
        for chi in self._pairs():
            by_phi.setdefault(chi.phi, []).append(chi)

        representative = {}
        for phi in sorted(by_phi):
            if phi in representative:
                continue
            for point in w_orbit(phi, self.group):
                representative[point] = phi

        grouped = {}
        for phi, members in by_phi.items():
            grouped.setdefault(representative[phi], []).extend(members)

        classes = []
        for position, phi in enumerate(sorted(grouped)):
            members = sorted(grouped[phi], key=lambda chi: (chi.w.index, chi.values))
            classes.append(GeomClass(position, phi, tuple(members)))
        logger.info(
            f"{len(classes)} geometric classes for {self.fd.datum.label}, q={self.fd.q}"
        )
        return tuple(classes)

    def __len__(self):
        return len(self.classes)

    def __iter__(self):
        return iter(self.classes)

    def class_of(self, chi):
        """Position of the class containing the pair (chi.w, chi)."""
        return self._index[(chi.w, chi.values)]

    def unipotent_class(self):
        return self.classes[0]


def geometric_classes(fd, modular_ell=None):
    """
    Partition of all pairs (w, chi) into geometric conjugacy classes.

    With ``modular_ell`` only characters of order prime to l are kept, which
    is the classification over F_l-bar.
    """
    return list(SeriesTable(fd, modular_ell=modular_ell).classes)


@dataclass(frozen=True)
class EllBlock:
    position: int
    semisimple: GeomClass
    classes: tuple

    @property
    def size(self):
        return sum(klass.size for klass in self.classes)


def ell_blocks(fd, ell, table=None):
    """
    Group geometric classes by the class of their l'-parts.

    Two pairs land in the same block when the l'-parts of their characters
    are geometrically conjugate. Blocks are ordered like the classes of
    their l'-parts.
    """
    table = table or SeriesTable(fd)
    blocks = {}
    for klass in table:
        _, chi_ell_prime = ell_part_split(klass.representative, ell)
        key = table.class_of(chi_ell_prime)
        blocks.setdefault(key, []).append(klass)
    return [
        EllBlock(position, table.classes[key], tuple(blocks[key]))
        for position, key in enumerate(sorted(blocks))
    ]
