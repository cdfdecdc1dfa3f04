"""
Exact integer matrices and their Smith normal form.

Matrices are immutable tuples of int rows; arithmetic goes through numpy
arrays of ``dtype=object`` so entries stay arbitrary-precision Python ints.
"""

import logging
from dataclasses import dataclass

import numpy as np
from sympy import Matrix

from .exceptions import DomainError, UsageError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class IntMatrix:
    rows: tuple

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.rows)
        if rows and len({len(row) for row in rows}) != 1:
            raise UsageError("Matrix rows must all have the same length.")
        object.__setattr__(self, "rows", rows)

    # ---- constructors -------------------------------------------------

    @classmethod
    def identity(cls, n):
        return cls(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @classmethod
    def zeros(cls, m, n):
        return cls(tuple((0,) * n for _ in range(m)))

    @classmethod
    def from_array(cls, array):
        return cls(tuple(tuple(row) for row in np.asarray(array, dtype=object)))

    @classmethod
    def diagonal_matrix(cls, entries):
        n = len(entries)
        return cls(
            tuple(
                tuple(entries[i] if i == j else 0 for j in range(n)) for i in range(n)
            )
        )

    # ---- shape --------------------------------------------------------

    @property
    def nrows(self):
        return len(self.rows)

    @property
    def ncols(self):
        return len(self.rows[0]) if self.rows else 0

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def to_array(self):
        if not self.rows:
            return np.zeros((0, 0), dtype=object)
        return np.array(self.rows, dtype=object)

    def to_list(self):
        return [list(row) for row in self.rows]

    def __getitem__(self, index):
        i, j = index
        return self.rows[i][j]

    def row(self, i):
        return self.rows[i]

    def column(self, j):
        return tuple(row[j] for row in self.rows)

    # ---- arithmetic ---------------------------------------------------

    def _check_same_shape(self, other):
        if self.shape != other.shape:
            raise UsageError(f"Shape mismatch: {self.shape} vs {other.shape}.")

    def __add__(self, other):
        self._check_same_shape(other)
        return IntMatrix.from_array(self.to_array() + other.to_array())

    def __sub__(self, other):
        self._check_same_shape(other)
        return IntMatrix.from_array(self.to_array() - other.to_array())

    def __neg__(self):
        return IntMatrix.from_array(-self.to_array())

    def __mul__(self, scalar):
        if not isinstance(scalar, int):
            return NotImplemented
        return IntMatrix.from_array(self.to_array() * scalar)

    __rmul__ = __mul__

    def __matmul__(self, other):
        if self.ncols != other.nrows:
            raise UsageError(f"Cannot multiply {self.shape} by {other.shape}.")
        if not self.nrows or not other.ncols:
            return IntMatrix.zeros(self.nrows, other.ncols)
        if not self.ncols:
            return IntMatrix.zeros(self.nrows, other.ncols)
        return IntMatrix.from_array(self.to_array() @ other.to_array())

    def transpose(self):
        return IntMatrix(tuple(zip(*self.rows))) if self.rows else self

    def is_square(self):
        return self.nrows == self.ncols

    def is_identity(self):
        return self == IntMatrix.identity(self.nrows)

    def is_diagonal(self):
        return all(
            value == 0
            for i, row in enumerate(self.rows)
            for j, value in enumerate(row)
            if i != j
        )

    def diagonal(self):
        return tuple(self.rows[i][i] for i in range(min(self.shape)))

    def det(self):
        """Determinant by fraction-free Bareiss elimination."""
        if not self.is_square():
            raise UsageError("Determinant of a non-square matrix.")
        n = self.nrows
        if n == 0:
            return 1
        a = [list(row) for row in self.rows]
        sign, previous = 1, 1
        for k in range(n - 1):
            if a[k][k] == 0:
                swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
                if swap is None:
                    return 0
                a[k], a[swap] = a[swap], a[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // previous
            previous = a[k][k]
        return sign * a[n - 1][n - 1]

    def inverse(self):
        """
        Inverse of a unimodular matrix.

        Raises:
            DomainError: If the determinant is not +-1.
        """
        if self.det() not in (1, -1):
            raise DomainError("Only unimodular integer matrices are invertible over Z.")
        if self.nrows == 0:
            return self
        inverse = Matrix(self.to_list()).inv()
        return IntMatrix(tuple(tuple(int(x) for x in inverse.row(i)) for i in range(self.nrows)))

    def order(self, cap=10_000):
        """
        Multiplicative order of a finite-order square matrix.

        Raises:
            DomainError: If no power up to ``cap`` is the identity.
        """
        identity = IntMatrix.identity(self.nrows)
        power = self
        for exponent in range(1, cap + 1):
            if power == identity:
                return exponent
            power = power @ self
        raise DomainError(f"Matrix has no finite order up to {cap}.")


@dataclass(frozen=True)
class SmithForm:
    """``U @ M @ V == D`` with U, V unimodular and D diagonal."""

    D: IntMatrix
    U: IntMatrix
    V: IntMatrix

    @property
    def invariant_factors(self):
        return self.D.diagonal()


def smith_normal_form(matrix):
    """
    Smith normal form of an integer matrix.

    Args:
        matrix: An IntMatrix of any rectangular shape.

    Returns:
        SmithForm with U @ matrix @ V == D, the diagonal of D non-negative
        and each entry dividing the next.
    """
    a = matrix.to_array().copy()
    m, n = a.shape
    u = np.eye(m, dtype=object)
    v = np.eye(n, dtype=object)

    for t in range(min(m, n)):
        while True:
            candidates = [
                (abs(a[i, j]), i, j)
                for i in range(t, m)
                for j in range(t, n)
                if a[i, j] != 0
            ]
            if not candidates:
                break
            _, pi, pj = min(candidates)
            a[[t, pi]] = a[[pi, t]]
            u[[t, pi]] = u[[pi, t]]
            a[:, [t, pj]] = a[:, [pj, t]]
            v[:, [t, pj]] = v[:, [pj, t]]

            pivot = a[t, t]
            clean = True
            for i in range(t + 1, m):
                factor = a[i, t] // pivot
                if factor:
                    a[i] -= factor * a[t]
                    u[i] -= factor * u[t]
                clean = clean and a[i, t] == 0
            for j in range(t + 1, n):
                factor = a[t, j] // pivot
                if factor:
                    a[:, j] -= factor * a[:, t]
                    v[:, j] -= factor * v[:, t]
                clean = clean and a[t, j] == 0
            if not clean:
                continue

            offender = next(
                (
                    i
                    for i in range(t + 1, m)
                    for j in range(t + 1, n)
                    if a[i, j] % pivot != 0
                ),
                None,
            )
            if offender is None:
                break
            a[t] += a[offender]
            u[t] += u[offender]

        if a[t, t] < 0:
            a[t] = -a[t]
            u[t] = -u[t]

    result = SmithForm(
        D=IntMatrix.from_array(a) if m and n else IntMatrix.zeros(m, n),
        U=IntMatrix.from_array(u) if m else IntMatrix.zeros(0, 0),
        V=IntMatrix.from_array(v) if n else IntMatrix.zeros(0, 0),
    )
    logger.debug(f"SNF of {matrix.rows}: invariant factors {result.invariant_factors}")
    return result
