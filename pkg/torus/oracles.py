"""
Brute-force cross-checks for the torus computations.

Both oracles enumerate points directly instead of going through the Smith
form: one counts the F_w-fixed points of (F_{q^N}^x)^r, the other builds
the pairs (w, phi) from scratch and merges them along conjugation edges.
"""

import itertools
import logging
import math
from fractions import Fraction

import numpy as np
from django.conf import settings
from sympy.ntheory import n_order

from algebra.exceptions import DatumError, OracleRangeError
from algebra.matrices import IntMatrix
from coxeter.groups import build_group

from .frobenius import frobenius_matrix, reduce_mod_one
from .series import act

logger = logging.getLogger(__name__)


def _cap():
    return getattr(settings, "HECKELAB_ORACLE_CAP", 2_000_000)


def rationality_degree(w, fd):
    """
    Least N with every point of T^{wF} defined over F_{q^N}: the order of q
    modulo |det(q tau w - 1)|.
    """
    m = frobenius_matrix(w, fd) - IntMatrix.identity(fd.rank)
    size = abs(m.det())
    if size == 0:
        raise DatumError(f"q*tau*w - 1 is singular for w={w}.")
    return 1 if size == 1 else int(n_order(fd.q, size))


def brute_force_fixed_points(w, fd, N=None):
    """
    Count t in (F_{q^N}^x)^r with (wF)(t) = t by enumeration.

    A point is a vector k in (Z/M)^r, M = q^N - 1, and wF acts on it as
    q tau w. Fixed points are killed by g = gcd(det(q tau w - 1), M), so only
    the g^r points of (M/g) (Z/g)^r are tried.

    Raises:
        OracleRangeError: If more points than HECKELAB_ORACLE_CAP would be
            enumerated.
    """
    if N is None:
        N = rationality_degree(w, fd)
    r = fd.rank
    frobenius = frobenius_matrix(w, fd)
    shifted = frobenius - IntMatrix.identity(r)
    modulus = fd.q**N - 1
    g = math.gcd(abs(shifted.det()), modulus)
    points = g**r
    if points > _cap():
        raise OracleRangeError(
            f"{points} candidate points exceed the oracle cap {_cap()}.", points=points
        )

    step = modulus // g
    bound = modulus * max((abs(x) for row in shifted.rows for x in row), default=1) * r
    dtype = np.int64 if bound < 2**62 else object
    grid = np.indices((g,) * r).reshape(r, -1).astype(dtype) * step
    images = np.asarray(shifted.to_list(), dtype=dtype) @ grid
    count = int(np.count_nonzero(np.all(images % modulus == 0, axis=0)))
    logger.debug(f"Brute force over F_{fd.q}^{N}: {count} fixed points for w={w}")
    return count


def brute_force_points(w, fd):
    """phi in ((1/n) Z/Z)^r with phi F_w = phi, n = |det(F_w - 1)|."""
    r = fd.rank
    shifted = frobenius_matrix(w, fd) - IntMatrix.identity(r)
    n = abs(shifted.det())
    if n**r > _cap():
        raise OracleRangeError(f"{n**r} candidate points exceed the oracle cap {_cap()}.")
    grid = np.array(list(itertools.product(range(n), repeat=r)), dtype=np.int64).reshape(-1, r)
    images = grid @ np.asarray(shifted.to_list(), dtype=np.int64)
    fixed = grid[np.all(images % n == 0, axis=1)]
    return [reduce_mod_one(Fraction(x, n) for x in row) for row in fixed.tolist()]


class _UnionFind:
    def __init__(self):
        self.parent = {}

    def find(self, x):
        self.parent.setdefault(x, x)
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


def pair_orbit_count(fd):
    """
    Number of geometric classes, counted on the pairs (w, phi) directly.

    Pairs are joined along (w, phi) ~ (w', phi s) for every simple
    reflection s, where w' has matrix tau^-1 s tau w s, and pairs sharing a
    point phi are joined too.
    """
    group = build_group(fd.datum)
    by_matrix = {x.matrix: x for x in group}
    tau = fd.tau_matrix
    tau_inverse = tau.inverse()
    reflections = fd.datum.reflection_matrices

    nodes = [(w, phi) for w in group for phi in brute_force_points(w, fd)]
    forest = _UnionFind()
    first_with_point = {}
    for w, phi in nodes:
        node = (w.index, phi)
        forest.find(node)
        if phi in first_with_point:
            forest.union(node, first_with_point[phi])
        else:
            first_with_point[phi] = node
        for s in reflections:
            target = by_matrix.get(tau_inverse @ s @ tau @ w.matrix @ s)
            if target is None:
                raise DatumError("tau does not normalize W on X_*.")
            forest.union(node, (target.index, act(phi, s)))

    roots = {forest.find((w.index, phi)) for w, phi in nodes}
    logger.debug(f"Pair-orbit oracle: {len(nodes)} pairs, {len(roots)} classes")
    return len(roots)
