"""
Classes of standard, costandard, IC and tilting objects in the
Grothendieck group, realised in the (monodromic) Hecke algebra.

    [std_w]   = H_w               [costd_w] = H_{w^-1}^-1 = bar(H_w)
    [ic_w]    = tilde basis       [tilt_w]  = KL basis

For a non-trivial character the same dictionary is read in the block of its
geometric class. Tilting classes there are conjectural and need an explicit
opt-in. A Tate twist by m multiplies the class by v^-m.
"""

import logging
from dataclasses import dataclass, field
from functools import cached_property, lru_cache

from algebra.exceptions import GatedFeatureError, InvalidModulusError, UsageError
from algebra.finite_fields import validate_prime
from algebra.laurent import LaurentPoly
from hecke.algebra import HeckeElem, bar_standard
from hecke.kl import kl_basis, kl_tilde
from monodromic.algebra import MonoElem, bar_basis, block_basis
from monodromic.kl import mono_kl, mono_kl_tilde
from torus.frobenius import TorusCharacter, ell_power_characters, fixed_torus, reduce_mod_one
from torus.series import SeriesTable, w_orbit

logger = logging.getLogger(__name__)

STD = "std"
COSTD = "costd"
IC = "ic"
TILT = "tilt"
KINDS = (STD, COSTD, IC, TILT)

QBAR = "Qbar_l"
ZBAR = "Zbar_l"
RINGS = (QBAR, ZBAR)


@lru_cache(maxsize=64)
def _series_table(fd):
    return SeriesTable(fd)


@lru_cache(maxsize=1024)
def _block(fd, position):
    table = _series_table(fd)
    return block_basis(table.classes[position], table.group)


def block_of(fd, phi, group):
    """The monodromic block whose orbit contains ``phi``."""
    table = _series_table(fd)
    if table.group.key != group.key:
        raise UsageError(f"The Frobenius datum does not belong to the group of {group.datum.label}.")
    anchor = min(w_orbit(tuple(phi), group))
    for klass in table:
        if klass.phi == anchor:
            return _block(fd, klass.position)
    raise UsageError(f"{phi} is not the point of any pair (w, chi).")


@dataclass(frozen=True)
class NMatrix:
    """
    Decomposition multiplicities n[v, w, chi_l] of l-modular tilting objects.

    ``entries`` holds n[v, w, 1] keyed by (v, w); ``overrides`` holds values
    for individual l-power characters keyed by (v, w, chi values). Anything
    missing is 0.
    """

    entries: dict = field(default_factory=dict)
    overrides: dict = field(default_factory=dict)

    def multiplicity(self, v, w, chi=None):
        if chi is not None and (v, w, tuple(chi)) in self.overrides:
            return self.overrides[(v, w, tuple(chi))]
        if chi is None or not any(chi):
            return self.entries.get((v, w), 0)
        return 0

    def is_zero(self):
        return not any(self.entries.values()) and not any(self.overrides.values())


ZERO_N_MATRIX = NMatrix()


@dataclass(frozen=True)
class K0Class:
    """A labelled class; ``element`` evaluates the dictionary lazily."""

    kind: str
    w: object
    group: object = field(compare=False, repr=False)
    phi: tuple = ()
    fd: object = field(default=None, compare=False, repr=False)
    ring: str = QBAR
    twist: int = 0
    conjectural: bool = field(default=False, compare=False)
    n_matrix: NMatrix = field(default=ZERO_N_MATRIX, compare=False, repr=False)

    def is_unipotent(self):
        return not any(self.phi)

    @cached_property
    def element(self):
        if self.is_unipotent():
            element = self._hecke_element()
        else:
            element = self._mono_element()
        if self.twist:
            element = element.scale(LaurentPoly.monomial(-self.twist))
        return element

    def _hecke_element(self):
        group, w = self.group, self.w
        if self.kind == STD:
            return HeckeElem.basis(group, w)
        if self.kind == COSTD:
            return bar_standard(group, w)
        if self.kind == IC:
            return kl_tilde(w, group)
        return kl_basis(w, group)

    def _mono_element(self):
        if self.fd is None:
            raise UsageError("A non-trivial character needs its Frobenius datum.")
        block = block_of(self.fd, self.phi, self.group)
        w, phi = self.w, tuple(self.phi)
        if self.kind == STD:
            return MonoElem.basis(block, w, phi)
        if self.kind == COSTD:
            return bar_basis(block, w, phi)
        if self.kind == IC:
            return mono_kl_tilde(block, w, phi)
        _gate(self.conjectural)
        return mono_kl(block, w, phi)


def _gate(conjectural):
    if not conjectural:
        raise GatedFeatureError(
            "Tilting classes with a non-trivial character are conjectural; "
            "pass the conjectural flag to compute them."
        )


def k0_class(kind, w, group, chi=None, ring=QBAR, twist=0, conjectural=False, fd=None, n_matrix=None):
    """
    The class of the ``kind`` object attached to (w, chi).

    ``chi`` is a TorusCharacter, a point of Hom(X_*, Q/Z) together with
    ``fd``, or None for the trivial character.

    Raises:
        UsageError: For an unknown kind or ring, or a character of another datum.
        GatedFeatureError: For a tilting class with non-trivial character
            when ``conjectural`` is not set.
    """
    if kind not in KINDS:
        raise UsageError(f"Unknown class kind {kind!r}; expected one of {', '.join(KINDS)}.")
    if ring not in RINGS:
        raise UsageError(f"Unknown coefficient ring {ring!r}.")
    if isinstance(chi, TorusCharacter):
        fd = chi.torus.fd
        phi = chi.phi
    elif chi is None:
        phi = reduce_mod_one((0,) * group.datum.rank)
    else:
        phi = reduce_mod_one(chi)
    if fd is not None and fd.datum.datum_hash != group.datum.datum_hash:
        raise UsageError("The character belongs to another root datum.")
    if kind == TILT and any(phi):
        _gate(conjectural)
    return K0Class(
        kind=kind,
        w=w,
        group=group,
        phi=phi,
        fd=fd,
        ring=ring,
        twist=twist,
        conjectural=conjectural,
        n_matrix=n_matrix or ZERO_N_MATRIX,
    )


def zl_decompose(c, ell, n_matrix=None, fd=None):
    """
    Split a class over Zbar_l after inverting l.

    Each l-power character chi_l of T^{wF} contributes the summand of
    (w, chi_l); a tilting class also picks up n[v, w, chi_l] copies of the
    tilting class of (v, chi_l) for every v < w.

    Raises:
        UsageError: For IC classes, classes with non-trivial character or a
            class over Qbar_l.
        InvalidModulusError: If l is not prime or equals p.
    """
    if c.kind == IC or not c.is_unipotent():
        raise UsageError("Only std, costd and tilt classes with trivial character decompose.")
    if c.ring != ZBAR:
        raise UsageError("The decomposition applies to classes over Zbar_l.")
    fd = fd or c.fd
    if fd is None:
        raise UsageError("The decomposition needs a Frobenius datum.")
    validate_prime(ell)
    if ell == fd.p:
        raise InvalidModulusError(f"l={ell} equals the characteristic of q={fd.q}.", ell=ell)
    n_matrix = n_matrix or c.n_matrix
    group = c.group
    lower = [v for v in group.bruhat_interval(group.identity, c.w) if v != c.w]

    def summand(kind, w, chi_l):
        return K0Class(
            kind=kind,
            w=w,
            group=group,
            phi=chi_l.phi,
            fd=fd,
            ring=QBAR,
            twist=c.twist,
            conjectural=c.conjectural,
        )

    summands = []
    for chi_l in ell_power_characters(fixed_torus(c.w, fd), ell):
        summands.append(summand(c.kind, c.w, chi_l))
        if c.kind != TILT:
            continue
        for v in lower:
            summands.extend([summand(TILT, v, chi_l)] * n_matrix.multiplicity(v, c.w, chi_l.values))
    logger.debug(f"{c.kind} class of {c.w} splits into {len(summands)} summands at l={ell}")
    return summands
