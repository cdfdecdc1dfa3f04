import logging

from hecke.kl import NEGATIVE, POSITIVE, solve_self_dual

from .algebra import MonoElem, bar_basis

logger = logging.getLogger(__name__)


def _solve(block, w, phi, side):
    cache = block._kl_cache
    key = (w.index, phi, side)
    if key not in cache:
        group = block.group
        candidates = [
            (y, psi)
            for y in group.bruhat_interval(group.identity, w)
            for psi in block.orbit
        ]
        solution = solve_self_dual(
            (w, phi),
            candidates,
            lambda k: bar_basis(block, k[0], k[1]).support,
            lambda k: k[0].length,
            side=side,
        )
        cache[key] = MonoElem(block, solution)
        logger.debug(f"Monodromic KL element of ({w}, {phi}) has {len(solution)} terms")
    return cache[key]


def mono_kl(block, w, phi):
    """The self-dual element H_w 1_phi + sum vZ[v] H_y 1_psi."""
    return _solve(block, w, phi, POSITIVE)


def mono_kl_tilde(block, w, phi):
    """The self-dual element H_w 1_phi + sum v^-1 Z[v^-1] H_y 1_psi."""
    return _solve(block, w, phi, NEGATIVE)


def block_rows(block):
    """(w, phi, y, psi, h, h_tilde) for every basis pair of the block."""
    rows = []
    for w, phi in block.basis:
        basis, tilde = mono_kl(block, w, phi), mono_kl_tilde(block, w, phi)
        keys = sorted(
            set(basis.support) | set(tilde.support),
            key=lambda k: (k[0].index, k[1]),
        )
        for y, psi in keys:
            rows.append((w, phi, y, psi, basis.coefficient(y, psi), tilde.coefficient(y, psi)))
    return rows
