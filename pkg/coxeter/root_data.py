"""
Root data and the built-in presets.

Conventions: the Cartan matrix is a_ij = <coroot_i, root_j>. The cocharacter
lattice X_* is Z^r; ``coroots`` is r x n with the simple coroots as columns
and ``roots`` is n x r with the simple roots as rows, so that
``roots @ coroots`` is the transpose of the Cartan matrix. The simple
reflection s_i acts on X_* by I - coroot_i * root_i.
"""

import hashlib
import json
import logging
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path

from django.conf import settings
from django.core.exceptions import ValidationError

from algebra.matrices import IntMatrix

from .validators import (
    validate_cartan_matrix,
    validate_root_datum,
    validate_tau_permutation,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RootDatum:
    label: str
    cartan: IntMatrix
    coroots: IntMatrix
    roots: IntMatrix
    tau: tuple
    tau_matrix: IntMatrix
    rank: int

    @property
    def semisimple_rank(self):
        return self.cartan.nrows

    @property
    def is_split(self):
        return self.tau_matrix.is_identity()

    @cached_property
    def delta(self):
        """Order of tau on X_*; (G, F^delta) is split."""
        return self.tau_matrix.order()

    @cached_property
    def reflection_matrices(self):
        """Matrices of the simple reflections on X_*, indexed from 0."""
        identity = IntMatrix.identity(self.rank)
        matrices = []
        for i in range(self.semisimple_rank):
            coroot = IntMatrix(tuple((x,) for x in self.coroots.column(i)))
            root = IntMatrix((self.roots.row(i),))
            matrices.append(identity - coroot @ root)
        return tuple(matrices)

    def to_dict(self):
        return {
            "label": self.label,
            "cartan": self.cartan.to_list(),
            "coroots": self.coroots.to_list(),
            "roots": self.roots.to_list(),
            "tau": list(self.tau),
            "tau_matrix": self.tau_matrix.to_list(),
        }

    @cached_property
    def datum_hash(self):
        """SHA-256 of the datum content, independent of its label."""
        payload = self.to_dict()
        payload.pop("label")
        encoded = json.dumps(payload, sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(encoded.encode("utf-8")).hexdigest()


def make_root_datum(label, cartan, coroots, roots, tau=None, tau_matrix=None, rank=None):
    """
    Build and validate a RootDatum from plain lists.

    Raises:
        ValidationError: If the pieces do not form a root datum.
    """
    validate_cartan_matrix(cartan)
    n = len(cartan)
    if rank is None:
        rank = len(coroots) if coroots else n
    tau = tuple(tau) if tau else tuple(range(1, n + 1))
    validate_tau_permutation(tau, cartan)

    datum = RootDatum(
        label=label,
        cartan=IntMatrix(cartan),
        coroots=IntMatrix(coroots) if coroots else IntMatrix(tuple(() for _ in range(rank))),
        roots=IntMatrix(roots) if roots else IntMatrix(()),
        tau=tau,
        tau_matrix=IntMatrix(tau_matrix) if tau_matrix else IntMatrix.identity(rank),
        rank=rank,
    )
    validate_root_datum(datum)
    return datum


def adjoint_datum(label, cartan, tau=None, tau_matrix=None):
    """Adjoint type: X^* is the root lattice, simple roots the standard basis."""
    n = len(cartan)
    roots = [[int(i == j) for j in range(n)] for i in range(n)]
    coroots = [[cartan[i][j] for i in range(n)] for j in range(n)]
    return make_root_datum(label, cartan, coroots, roots, tau, tau_matrix)


def _build_presets():
    presets = {
        "A1": adjoint_datum("A1-adjoint", [[2]]),
        "A2": adjoint_datum("A2-adjoint", [[2, -1], [-1, 2]]),
        "A3": adjoint_datum(
            "A3-adjoint", [[2, -1, 0], [-1, 2, -1], [0, -1, 2]]
        ),
        "B2": adjoint_datum("B2-adjoint", [[2, -1], [-2, 2]]),
        "B3": adjoint_datum(
            "B3-adjoint", [[2, -1, 0], [-1, 2, -1], [0, -2, 2]]
        ),
        "G2": adjoint_datum("G2-adjoint", [[2, -1], [-3, 2]]),
        "2A2": adjoint_datum(
            "2A2-adjoint",
            [[2, -1], [-1, 2]],
            tau=[2, 1],
            tau_matrix=[[0, 1], [1, 0]],
        ),
        "GL2": make_root_datum("GL2", [[2]], coroots=[[1], [-1]], roots=[[1, -1]]),
        "SL2": make_root_datum("SL2", [[2]], coroots=[[1]], roots=[[2]]),
        "T1": make_root_datum("T1", [], coroots=[[]], roots=[], rank=1),
    }
    return presets


_PRESETS = None


def _load_preset_file(path):
    from .serializers import RootDatumSerializer

    data = json.loads(Path(path).read_text(encoding="utf-8"))
    entries = data if isinstance(data, list) else [data]
    loaded = {}
    for entry in entries:
        serializer = RootDatumSerializer(data=entry)
        if not serializer.is_valid():
            raise ValidationError(
                f"Invalid preset in {path}: {serializer.errors}", code="invalid_preset"
            )
        datum = serializer.save()
        loaded[entry.get("name", datum.label)] = datum
    logger.info(f"Loaded {len(loaded)} presets from {path}")
    return loaded


def presets():
    """All known presets, including those from HECKELAB_PRESETS_FILE."""
    global _PRESETS
    if _PRESETS is None:
        table = _build_presets()
        extra = getattr(settings, "HECKELAB_PRESETS_FILE", "")
        if extra:
            table.update(_load_preset_file(extra))
        _PRESETS = table
    return _PRESETS


def get_preset(name):
    """
    Look up a preset by name.

    Raises:
        ValidationError: If no preset has that name.
    """
    table = presets()
    if name not in table:
        raise ValidationError(
            f"Unknown preset {name!r}; choose from {', '.join(sorted(table))}.",
            code="unknown_preset",
        )
    return table[name]


def load_datum_file(path):
    """Read a single root datum from a JSON file."""
    from .serializers import RootDatumSerializer

    try:
        payload = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise ValidationError(f"Cannot read datum file {path}: {exc}", code="datum_file")
    serializer = RootDatumSerializer(data=payload)
    if not serializer.is_valid():
        raise ValidationError(f"Invalid datum file {path}: {serializer.errors}", code="datum_file")
    return serializer.save()
