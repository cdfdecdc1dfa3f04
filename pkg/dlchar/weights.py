"""
Reduction of Frobenius weights mod l and the projectivity certificates.

The exponent i of v stands for the eigenvalue (sqrt q)^{delta i}. Reducing a
fixed square root of q into F_l-bar identifies exponents that agree modulo
the order of (sqrt q)^delta; a class of exponents is a lambda-bar.
"""

import logging
from dataclasses import dataclass

from algebra.exceptions import UnsupportedError, UsageError
from algebra.finite_fields import ff_order, ff_sqrt

from .duality import duality_check
from .k0 import IC, TILT, ZBAR, k0_class, zl_decompose
from .uniform import UniformVirtual, alvis_curtis, ch_map

logger = logging.getLogger(__name__)

CANONICAL = "canonical"
OTHER = "other"
SQRT_CHOICES = (CANONICAL, OTHER)


@dataclass(frozen=True)
class WeightClass:
    class_id: int
    exponents: tuple
    eigenvalue: object
    component: UniformVirtual


@dataclass(frozen=True)
class WeightPartition:
    ell: object
    q: int
    delta: int
    sqrt_choice: str
    root: object
    period: object
    classes: tuple

    def class_id(self, exponent):
        return exponent if self.period is None else exponent % self.period

    @property
    def ids(self):
        return [klass.class_id for klass in self.classes]

    def component(self, class_id):
        for klass in self.classes:
            if klass.class_id == class_id:
                return klass.component
        return UniformVirtual()

    def total(self):
        total = UniformVirtual()
        for klass in self.classes:
            total = total + klass.component
        return total


def reduced_root(q, ell, sqrt_choice=CANONICAL):
    """
    The chosen square root of q in F_l-bar.

    Raises:
        UsageError: For an unknown ``sqrt_choice``.
        InvalidModulusError: If l is not prime or divides q.
    """
    if sqrt_choice not in SQRT_CHOICES:
        raise UsageError(f"sqrt_choice must be one of {', '.join(SQRT_CHOICES)}.")
    root = ff_sqrt(q, ell)
    return root if sqrt_choice == CANONICAL else -root


def weight_partition(u, q, ell, delta=1, sqrt_choice=CANONICAL):
    """
    Group the exponents of ``u`` by the reduction of (sqrt q)^{delta i} mod l.

    With ``ell=None`` nothing is reduced and every exponent is its own class.

    Raises:
        InvalidModulusError: If l is not prime or l = p.
    """
    if ell is None:
        root, base, period = None, None, None
    else:
        root = reduced_root(q, ell, sqrt_choice)
        base = root**delta
        period = ff_order(base)

    grouped = {}
    for exponent in u.exponents():
        class_id = exponent if period is None else exponent % period
        grouped.setdefault(class_id, []).append(exponent)

    classes = []
    for class_id in sorted(grouped):
        members = frozenset(grouped[class_id])
        classes.append(
            WeightClass(
                class_id=class_id,
                exponents=tuple(sorted(members)),
                eigenvalue=None if base is None else base**class_id,
                component=u.restrict(lambda e, members=members: e in members),
            )
        )
    return WeightPartition(
        ell=ell,
        q=q,
        delta=delta,
        sqrt_choice=sqrt_choice,
        root=root,
        period=period,
        classes=tuple(classes),
    )


@dataclass(frozen=True)
class ProjCertificate:
    w: object
    lambda_bar_id: int
    eigenvalue: object
    ic_component: UniformVirtual
    dual: UniformVirtual
    tilt_id: int
    tilt_component: UniformVirtual
    sign: int
    passed: bool

    def diff(self):
        return self.dual - self.tilt_component.scale(self.sign)


def unipotent_tilting_character(w, group, fd, ell, n_matrix=None):
    """ch of the trivial-character part of T_{w,1} over Zbar_l after inverting l."""
    tilt = k0_class(TILT, w, group, ring=ZBAR, fd=fd, n_matrix=n_matrix)
    total = UniformVirtual()
    for summand in zl_decompose(tilt, ell):
        if summand.is_unipotent():
            total = total + ch_map(summand)
    return total


def dudas_malle_certificate(w, group, fd, ell, n_matrix=None, sqrt_choice=CANONICAL):
    """
    One certificate per lambda-bar: d(ch(IC_w)[lambda]) must equal the
    global duality sign times ch(T_w)[lambda'], where lambda' is the class
    of the inverted exponents.

    Raises:
        UnsupportedError: For twisted data.
        InvalidModulusError: If l is not prime or l = p.
        IdentityViolation: If duality itself fails at w.
    """
    if not fd.is_split:
        raise UnsupportedError("Certificates are only produced for split data.")
    sign = duality_check(w, group).sign
    ic = ch_map(k0_class(IC, w, group))
    tilt = unipotent_tilting_character(w, group, fd, ell, n_matrix)
    ic_weights = weight_partition(ic, fd.q, ell, fd.delta, sqrt_choice)
    tilt_weights = weight_partition(tilt, fd.q, ell, fd.delta, sqrt_choice)
    period = ic_weights.period

    ids = set(ic_weights.ids) | {(-t) % period for t in tilt_weights.ids}
    certificates = []
    for class_id in sorted(ids):
        component = ic_weights.component(class_id)
        dual = alvis_curtis(component)
        tilt_id = (-class_id) % period
        tilt_component = tilt_weights.component(tilt_id)
        certificates.append(
            ProjCertificate(
                w=w,
                lambda_bar_id=class_id,
                eigenvalue=ic_weights.root ** (fd.delta * class_id),
                ic_component=component,
                dual=dual,
                tilt_id=tilt_id,
                tilt_component=tilt_component,
                sign=sign,
                passed=dual == tilt_component.scale(sign),
            )
        )
    failed = [c.lambda_bar_id for c in certificates if not c.passed]
    if failed:
        logger.warning(f"Certificates for w={w} fail at classes {failed}")
    return certificates
