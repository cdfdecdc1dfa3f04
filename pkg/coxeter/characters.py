"""
Ordinary character tables of Weyl groups by Dixon's method.

Central characters are the common eigenvectors of the class multiplication
matrices. They are found over F_p for a prime p = 1 mod the group exponent
with p > 2 sqrt|W|, scaled to characters there and lifted to the symmetric
residue range. Weyl group characters are rational, hence integral, so the
lift is exact; row and column orthogonality are verified before returning.
"""

import logging
from dataclasses import dataclass
from math import isqrt

from django.conf import settings
from sympy import nextprime
from sympy.ntheory import sqrt_mod
from sympy.polys.domains import GF
from sympy.polys.matrices import DomainMatrix

from algebra.exceptions import IdentityViolation, UnsupportedError

logger = logging.getLogger(__name__)

_TABLES = {}


@dataclass(frozen=True)
class CharacterTable:
    classes: tuple
    values: tuple  # values[k][c] = chi_k(class c)

    @property
    def degrees(self):
        return tuple(row[0] for row in self.values)

    def row(self, k):
        return self.values[k]


def dixon_prime(order, exponent):
    """Least prime p > 2*sqrt(order) with p = 1 mod exponent."""
    p = 2 * isqrt(order) + 1
    while True:
        p = nextprime(p)
        if p % exponent == 1:
            return p


def _class_structure_constants(group, classes):
    """c[r][j][l] = #{x in C_r : x^-1 g_l in C_j}, with g_l the representative of C_l."""
    k = len(classes)
    constants = [[[0] * k for _ in range(k)] for _ in range(k)]
    for r, klass in enumerate(classes):
        for x in klass.members:
            x_inv = group.invert(x)
            for l, target in enumerate(classes):
                j = group.class_of(group.multiply(x_inv, target.representative))
                constants[r][j][l] += 1
    return constants


def _eigenspaces(matrix, field, p):
    """Row eigenspaces ``c B = lambda c`` of a square DomainMatrix, in rref."""
    d = matrix.shape[0]
    spaces = []
    for value in range(p):
        shifted = matrix - DomainMatrix.diag([field(value)] * d, field)
        basis = shifted.transpose().nullspace()
        if basis.shape[0]:
            spaces.append(basis.rref()[0])
    return spaces


def _refine(spaces, operator, field, p):
    refined = []
    for space in spaces:
        if space.shape[0] <= 1:
            refined.append(space)
            continue
        space, pivots = space.rref()
        restricted = (space * operator).extract(range(space.shape[0]), list(pivots))
        for sub in _eigenspaces(restricted, field, p):
            refined.append((sub * space).rref()[0])
    return refined


def char_table(group, twisted=False):
    """
    Character table of W, rows sorted by (degree, values) with the trivial
    character first; columns follow ``group.conjugacy_classes()``.

    Raises:
        UnsupportedError: For the twisted extension, or a group larger
            than HECKELAB_MAX_CHAR_TABLE_ORDER.
        IdentityViolation: If the computed table is not orthogonal.
    """
    if twisted:
        raise UnsupportedError("Character tables of twisted extensions are not supported.")
    cap = getattr(settings, "HECKELAB_MAX_CHAR_TABLE_ORDER", 1152)
    if group.order > cap:
        raise UnsupportedError(f"|W| = {group.order} exceeds the character-table cap {cap}.")
    if group.key in _TABLES:
        return _TABLES[group.key]

    classes = group.conjugacy_classes()
    k = len(classes)
    sizes = [c.size for c in classes]
    order = group.order
    if k == 1:
        return CharacterTable(classes, ((1,),))

    p = dixon_prime(order, group.exponent())
    field = GF(p)
    constants = _class_structure_constants(group, classes)

    # omega (row) satisfies omega N_r = omega_r omega with N_r[l][j] = c[r][j][l]
    operators = [
        DomainMatrix.from_list(
            [[constants[r][j][l] for j in range(k)] for l in range(k)], field
        )
        for r in range(k)
    ]
    spaces = [DomainMatrix.eye(k, field)]
    for operator in operators[1:]:
        if len(spaces) == k:
            break
        spaces = _refine(spaces, operator, field, p)
    if len(spaces) != k:
        raise IdentityViolation("Class matrices did not split into one-dimensional spaces.")

    inverse_class = [group.class_of(group.invert(c.representative)) for c in classes]
    rows = []
    for space in spaces:
        omega = [int(x) % p for x in space.to_list()[0]]
        scale = pow(omega[0], -1, p)
        omega = [w * scale % p for w in omega]
        norm = sum(
            omega[i] * omega[inverse_class[i]] * pow(sizes[i], -1, p) for i in range(k)
        ) % p
        degree_squared = order * pow(norm, -1, p) % p
        degree = min(sqrt_mod(degree_squared, p, all_roots=True))
        row = []
        for i in range(k):
            value = omega[i] * degree * pow(sizes[i], -1, p) % p
            row.append(value if value <= p // 2 else value - p)
        rows.append(tuple(row))

    rows.sort(key=lambda row: (row[0], tuple(-v for v in row)))
    table = CharacterTable(classes, tuple(rows))
    _verify_orthogonality(table, order, inverse_class)
    _TABLES[group.key] = table
    logger.info(f"Character table of W({group.datum.label}): degrees {table.degrees}")
    return table


def _verify_orthogonality(table, order, inverse_class):
    sizes = [c.size for c in table.classes]
    k = len(sizes)
    for a, row_a in enumerate(table.values):
        for b, row_b in enumerate(table.values):
            product = sum(sizes[i] * row_a[i] * row_b[inverse_class[i]] for i in range(k))
            if product != (order if a == b else 0):
                raise IdentityViolation(
                    f"Row orthogonality fails for characters {a} and {b}."
                )
    for i in range(k):
        for j in range(k):
            product = sum(row[i] * row[inverse_class[j]] for row in table.values)
            expected = order // sizes[i] if i == j else 0
            if product != expected:
                raise IdentityViolation(f"Column orthogonality fails at classes {i}, {j}.")
