from django.conf import settings
from django.core.exceptions import ValidationError
from django.utils.translation import gettext_lazy as _

from algebra.exceptions import DomainError
from algebra.matrices import IntMatrix

# =====================
# CONFIGURATION CONSTANTS
# =====================

MAX_RANK = getattr(settings, "HECKELAB_MAX_RANK", 8)
MAX_TAU_ORDER = 6

# =====================
# CUSTOM VALIDATORS
# =====================


def _is_square(matrix):
    return all(len(row) == len(matrix) for row in matrix)


def validate_integer_matrix(matrix, rows=None, cols=None, name="matrix"):
    """
    Validate a list-of-lists integer matrix, optionally against a shape.

    Raises:
        ValidationError: If entries are not integers or the shape is wrong.
    """
    if not isinstance(matrix, (list, tuple)) or any(
        not isinstance(row, (list, tuple)) for row in matrix
    ):
        raise ValidationError(
            _("%(name)s must be a list of rows."),
            params={"name": name},
            code="invalid_matrix",
        )
    if any(isinstance(x, bool) or not isinstance(x, int) for row in matrix for x in row):
        raise ValidationError(
            _("%(name)s entries must be integers."),
            params={"name": name},
            code="invalid_matrix_entry",
        )
    widths = {len(row) for row in matrix}
    if len(widths) > 1:
        raise ValidationError(
            _("%(name)s is not rectangular."),
            params={"name": name},
            code="ragged_matrix",
        )
    if rows is not None and len(matrix) != rows:
        raise ValidationError(
            _("%(name)s must have %(rows)s rows, got %(got)s."),
            params={"name": name, "rows": rows, "got": len(matrix)},
            code="invalid_matrix_shape",
        )
    if cols is not None and matrix and len(matrix[0]) != cols:
        raise ValidationError(
            _("%(name)s must have %(cols)s columns, got %(got)s."),
            params={"name": name, "cols": cols, "got": len(matrix[0])},
            code="invalid_matrix_shape",
        )


def validate_cartan_matrix(matrix):
    """
    Validate a generalized Cartan matrix.

    Checks 2 on the diagonal, non-positive integers off the diagonal and
    a_ij = 0 exactly when a_ji = 0.

    Raises:
        ValidationError: If any of the conditions fails.
    """
    validate_integer_matrix(matrix, name="cartan")
    if not _is_square(matrix):
        raise ValidationError(_("Cartan matrix must be square."), code="cartan_not_square")

    n = len(matrix)
    if n > MAX_RANK:
        raise ValidationError(
            _("Semisimple rank %(n)s exceeds the supported maximum %(max)s."),
            params={"n": n, "max": MAX_RANK},
            code="rank_too_large",
        )

    for i in range(n):
        if matrix[i][i] != 2:
            raise ValidationError(
                _("Cartan diagonal entry (%(i)s,%(i)s) must be 2."),
                params={"i": i + 1},
                code="cartan_diagonal",
            )
        for j in range(n):
            if i == j:
                continue
            if matrix[i][j] > 0:
                raise ValidationError(
                    _("Cartan entry (%(i)s,%(j)s) must be non-positive."),
                    params={"i": i + 1, "j": j + 1},
                    code="cartan_positive_entry",
                )
            if (matrix[i][j] == 0) != (matrix[j][i] == 0):
                raise ValidationError(
                    _("Cartan entries (%(i)s,%(j)s) and (%(j)s,%(i)s) must vanish together."),
                    params={"i": i + 1, "j": j + 1},
                    code="cartan_asymmetric_zero",
                )


def validate_tau_permutation(tau, cartan):
    """
    Validate a diagram automorphism given as a 1-based permutation.

    Raises:
        ValidationError: If ``tau`` is not a permutation of the simple
            roots or does not preserve the Cartan matrix.
    """
    n = len(cartan)
    if sorted(tau) != list(range(1, n + 1)):
        raise ValidationError(
            _("tau must be a permutation of 1..%(n)s."),
            params={"n": n},
            code="tau_not_permutation",
        )
    for i in range(n):
        for j in range(n):
            if cartan[tau[i] - 1][tau[j] - 1] != cartan[i][j]:
                raise ValidationError(
                    _("tau does not preserve the Cartan matrix."),
                    code="tau_not_automorphism",
                )


def validate_root_datum(datum):
    """
    Cross-check the pieces of a built RootDatum.

    Roots paired with coroots must reproduce the Cartan matrix, and the
    matrix of tau on the cocharacter lattice must permute simple roots and
    coroots the way the permutation says.

    Raises:
        ValidationError: If the datum is inconsistent.
    """
    n, r = datum.semisimple_rank, datum.rank
    if datum.roots.shape != (n, r) and n:
        raise ValidationError(
            _("roots must be a %(n)sx%(r)s matrix."),
            params={"n": n, "r": r},
            code="roots_shape",
        )
    if datum.coroots.shape != (r, n) and n:
        raise ValidationError(
            _("coroots must be a %(r)sx%(n)s matrix."),
            params={"n": n, "r": r},
            code="coroots_shape",
        )
    if n and datum.roots @ datum.coroots != datum.cartan.transpose():
        raise ValidationError(
            _("Pairing roots with coroots does not give the Cartan matrix."),
            code="pairing_mismatch",
        )

    tau_matrix = datum.tau_matrix
    if tau_matrix.shape != (r, r) or tau_matrix.det() not in (1, -1):
        raise ValidationError(
            _("tau_matrix must be an invertible %(r)sx%(r)s integer matrix."),
            params={"r": r},
            code="tau_matrix_shape",
        )
    try:
        tau_matrix.order(cap=MAX_TAU_ORDER)
    except DomainError:
        raise ValidationError(
            _("tau_matrix must have finite order at most %(max)s."),
            params={"max": MAX_TAU_ORDER},
            code="tau_matrix_order",
        )
    for i in range(n):
        image = datum.tau[i] - 1
        coroot = IntMatrix(tuple((x,) for x in datum.coroots.column(i)))
        target = IntMatrix(tuple((x,) for x in datum.coroots.column(image)))
        if tau_matrix @ coroot != target:
            raise ValidationError(
                _("tau_matrix does not send coroot %(i)s to coroot %(j)s."),
                params={"i": i + 1, "j": image + 1},
                code="tau_matrix_coroots",
            )
        root = IntMatrix((datum.roots.row(image),))
        if root @ tau_matrix != IntMatrix((datum.roots.row(i),)):
            raise ValidationError(
                _("tau_matrix is not compatible with root %(i)s."),
                params={"i": i + 1},
                code="tau_matrix_roots",
            )
