"""
Kazhdan-Lusztig bases of the Hecke algebra.

Two self-dual bases are computed. The KL basis has H_w + sum_{y<w} vZ[v] H_y
and starts from H_s + v; the tilde basis has H_w + sum_{y<w} v^-1 Z[v^-1] H_y
and starts from H_s - v^-1. Both are built by the mu-recursion on the
lex-least left descent. ``solve_self_dual`` is an independent oracle that
inverts the bar involution on a Bruhat interval directly.
"""

import logging
import threading

import numpy as np
from django.core.cache import caches

from algebra.exceptions import IdentityViolation
from algebra.laurent import ONE, ZERO, LaurentPoly, V, V_INV

from .algebra import HeckeElem, bar_standard, left_mul_simple

logger = logging.getLogger(__name__)

POSITIVE = "positive"
NEGATIVE = "negative"


def solve_self_dual(top, candidates, bar_image, length, side=POSITIVE):
    """
    Find the unique bar-invariant element top + sum_y h_y y with every h_y
    in vZ[v] (``side="positive"``) or v^-1 Z[v^-1] (``side="negative"``).

    ``candidates`` are the basis keys that may appear, ``bar_image(x)`` maps
    a key to the coefficients of its bar image and ``length`` orders keys so
    that bar images only reach keys of smaller or equal length.

    Raises:
        IdentityViolation: If no such element exists, which means the bar
            images are not those of an involution.
    """
    coefficients = {top: ONE}
    images = {}
    ordered = sorted(
        (y for y in candidates if y != top), key=lambda y: -length(y)
    )
    for y in ordered:
        g = ZERO
        for x, h_x in coefficients.items():
            if x not in images:
                images[x] = bar_image(x)
            r = images[x].get(y)
            if r:
                g = g + h_x.bar() * r
        if not g:
            continue
        h_y = g.positive_part() if side == POSITIVE else g.negative_part()
        if g.constant_term() or h_y - h_y.bar() != g:
            raise IdentityViolation(
                f"The bar involution has no self-dual solution at {y}.", key=str(y)
            )
        if h_y:
            coefficients[y] = h_y
    return coefficients


def kl_by_bar_matrix(w, group, tilde=False):
    """KL (or tilde KL) element of ``w`` from the bar matrix of [e, w]."""
    solution = solve_self_dual(
        w,
        group.bruhat_interval(group.identity, w),
        lambda x: bar_standard(group, x).support,
        lambda x: x.length,
        side=NEGATIVE if tilde else POSITIVE,
    )
    return HeckeElem(group, solution)


class KLTable:
    """
    Both KL bases of one group, filled on demand.

    Entries are immutable once stored; the lock only serialises fills, so a
    table can be shared by worker threads.
    """

    def __init__(self, group):
        self.group = group
        self._basis = {}
        self._tilde = {}
        self._lock = threading.RLock()

    # ---- recursion ----------------------------------------------------

    def _recurse(self, w, tilde):
        store = self._tilde if tilde else self._basis
        found = store.get(w)
        if found is not None:
            return found
        with self._lock:
            if w in store:
                return store[w]
            group = self.group
            if w.is_identity():
                element = HeckeElem.unit(group)
            else:
                s = w.word[0]
                x = group.left_multiply(s, w)
                below = self._recurse(x, tilde)
                shift = -V_INV if tilde else V
                element = left_mul_simple(s, below) + below.scale(shift)
                for z, h_zx in below.items():
                    if z == x or s not in group.left_descents(z):
                        continue
                    mu = -h_zx.coefficient(-1) if tilde else h_zx.coefficient(1)
                    if mu:
                        element = element - self._recurse(z, tilde).scale(mu)
            store[w] = element
            logger.debug(f"{'tilde ' if tilde else ''}KL element of {w} has {len(element.support)} terms")
            return element

    def basis(self, w):
        return self._recurse(w, tilde=False)

    def tilde(self, w):
        return self._recurse(w, tilde=True)

    def h(self, y, w):
        return self.basis(w).coefficient(y)

    def h_tilde(self, y, w):
        return self.tilde(w).coefficient(y)

    def fill(self):
        for w in self.group:
            self.basis(w)
            self.tilde(w)
        return self

    # ---- export -------------------------------------------------------

    def base_change_matrix(self, tilde=False):
        """Object array M with M[y, w] the coefficient of H_y in the basis element of w."""
        size = self.group.order
        matrix = np.full((size, size), ZERO, dtype=object)
        for w in self.group:
            element = self.tilde(w) if tilde else self.basis(w)
            for y, c in element.items():
                matrix[y.index, w.index] = c
        return matrix

    def rows(self, w=None):
        """
        (w, y, h, h_tilde) for y <= w, optionally only for one w; ordered by
        w, then y, in group order.
        """
        targets = [w] if w is not None else list(self.group)
        rows = []
        for target in targets:
            for y in self.group.bruhat_interval(self.group.identity, target):
                rows.append((target, y, self.h(y, target), self.h_tilde(y, target)))
        return rows

    def to_records(self):
        return [
            {"w": w.word, "y": y.word, "h": h.to_dict(), "h_tilde": ht.to_dict()}
            for w, y, h, ht in self.rows()
        ]

    def load_records(self, records):
        """Rebuild both bases from ``to_records`` output."""
        basis, tilde = {}, {}
        for record in records:
            w = self.group.element(tuple(record["w"]))
            y = self.group.element(tuple(record["y"]))
            basis.setdefault(w, {})[y] = LaurentPoly.from_dict(record["h"])
            tilde.setdefault(w, {})[y] = LaurentPoly.from_dict(record["h_tilde"])
        with self._lock:
            for w, support in basis.items():
                self._basis[w] = HeckeElem(self.group, support)
            for w, support in tilde.items():
                self._tilde[w] = HeckeElem(self.group, support)
        return self


_TABLES = {}
_TABLES_LOCK = threading.Lock()


def cache_key(group):
    return f"kltable:{group.key}"


def kl_table(group):
    """
    The KL table of ``group``, kept per process and memoized between runs in
    the ``kltables`` cache under the datum hash.
    """
    with _TABLES_LOCK:
        table = _TABLES.get(group.key)
        if table is not None:
            return table
        table = KLTable(group)
        cache = caches["kltables"]
        records = cache.get(cache_key(group))
        if records is not None:
            logger.info(f"KL table for {group.datum.label} loaded from cache")
            table.load_records(records)
        else:
            table.fill()
            cache.set(cache_key(group), table.to_records(), timeout=None)
            logger.info(f"KL table for {group.datum.label} computed ({group.order} elements)")
        _TABLES[group.key] = table
        return table


def kl_basis(w, group):
    """The self-dual element H_w + sum_{y<w} vZ[v] H_y."""
    return kl_table(group).basis(w)


def kl_tilde(w, group):
    """The self-dual element H_w + sum_{y<w} v^-1 Z[v^-1] H_y."""
    return kl_table(group).tilde(w)
