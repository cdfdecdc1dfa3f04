"""
Exact checks of Alvis-Curtis duality between IC and tilting classes, and of
the trace identity tr = ch o b at v = 1.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction

from algebra.exceptions import IdentityViolation
from hecke.algebra import invol_b
from hecke.kl import kl_basis, kl_table

from .k0 import IC, TILT, k0_class
from .uniform import UniformVirtual, alvis_curtis, ch_map, class_function, specialize, tr_map

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DualityReport:
    w: object
    phi: tuple
    sign: int
    ic: UniformVirtual
    tilt: UniformVirtual

    @property
    def expected_sign(self):
        return -1 if self.w.length % 2 else 1


def match_sign(left, right):
    """+1 or -1 when left = +-right, None otherwise (zero matches with +1)."""
    if left == right:
        return 1
    if left == -right:
        return -1
    return None


def duality_check(w, group, chi=None, conjectural=False, fd=None):
    """
    Verify d(ch(ic_{w, chi})) = +-ch(tilt_{w, chi}) and return the report.

    Raises:
        GatedFeatureError: For a non-trivial character without ``conjectural``.
        IdentityViolation: If the two sides differ by more than a sign.
    """
    ic = k0_class(IC, w, group, chi=chi, conjectural=conjectural, fd=fd)
    tilt = k0_class(TILT, w, group, chi=chi, conjectural=conjectural, fd=fd)
    ic_character, expected = ch_map(ic), ch_map(tilt)
    dual = alvis_curtis(ic_character)
    sign = match_sign(dual, expected)
    if sign is None:
        raise IdentityViolation(
            f"d(ch(IC)) and ch(T) differ beyond a sign at w={w}: {dual} vs {expected}",
            w=w.word_string(),
        )
    logger.debug(f"Duality at {w}: sign {sign:+d}")
    return DualityReport(w=w, phi=ic.phi, sign=sign, ic=ic_character, tilt=expected)


@dataclass(frozen=True)
class TraceReport:
    w: object
    sign: int
    trace: tuple
    twisted_character: tuple


def kl_values_at_one(w, group):
    """sum_{y <= w} P_{y,w}(1) R_y as a class function."""
    table = kl_table(group)
    values = {}
    for y in group.bruhat_interval(group.identity, w):
        position = group.class_of(y)
        values[position] = values.get(position, 0) + table.h(y, w).evaluate(1)
    return class_function(group, values)


def tr_identity_check(w, group):
    """
    Compare tr(H_w KL)|_1 with (ch o b)(H_w KL)|_1 and report the sign.

    Raises:
        UnsupportedError: For twisted data.
        IdentityViolation: If tr(KL_w)|_1 differs from sum_y P_{y,w}(1) R_y,
            or the two sides differ beyond a sign.
    """
    basis = kl_basis(w, group)
    trace = tr_map(basis)
    if trace != kl_values_at_one(w, group):
        raise IdentityViolation(
            f"tr at v=1 disagrees with the KL polynomials at w={w}.", w=w.word_string()
        )
    twisted = specialize(ch_map(invol_b(basis)), group)
    if trace == twisted:
        sign = 1
    elif trace == tuple(-x for x in twisted):
        sign = -1
    else:
        raise IdentityViolation(
            f"tr and ch o b differ beyond a sign at w={w}.", w=w.word_string()
        )
    return TraceReport(
        w=w,
        sign=sign,
        trace=trace,
        twisted_character=tuple(Fraction(x) for x in twisted),
    )
