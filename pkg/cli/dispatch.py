"""
Command implementations shared by the management commands and the API.

Every command returns a Result: the JSON payload, an optional flat row view
for CSV and text output, and the rows whose checks failed. Checks that fail
are recorded rather than raised so the artifact is always complete.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from django.core.exceptions import ValidationError

from algebra.exceptions import IdentityViolation
from coxeter.characters import char_table
from coxeter.serializers import CharacterTableSerializer, GroupSerializer
from dlchar.duality import duality_check, tr_identity_check
from dlchar.serializers import DualityRowSerializer, TraceRowSerializer, certificate_payload
from dlchar.weights import dudas_malle_certificate
from hecke.kl import kl_table
from hecke.serializers import kl_rows
from monodromic.algebra import block_basis
from monodromic.serializers import MonoBlockSerializer, mono_rows
from torus.frobenius import CHARACTER_ENCODING, fixed_torus, reduce_mod_one
from torus.serializers import FixedTorusSerializer, series_payload
from torus.series import SeriesTable, ell_blocks

logger = logging.getLogger(__name__)


@dataclass
class Result:
    payload: object
    rows: list = None
    failures: list = field(default_factory=list)

    @property
    def table(self):
        return self.payload if self.rows is None else self.rows


def map_elements(fn, items, workers=1):
    """[fn(x) for x in items], fanned over a thread pool; order is preserved."""
    items = list(items)
    if workers <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def _elements(cfg):
    return [cfg.w] if cfg.w is not None else list(cfg.group.elements)


def _geometric_class(table, position):
    if position >= len(table):
        raise ValidationError(
            f"There is no geometric class {position}; the table has {len(table)}.",
            code="unknown_block",
        )
    return table.classes[position]


def _sign(w):
    return -1 if w.length % 2 else 1


def run_group(cfg):
    context = {"group": cfg.group, "twisted": cfg.twisted}
    payload = dict(GroupSerializer(cfg.group, context=context).data)
    if cfg.characters:
        payload["character_table"] = CharacterTableSerializer(char_table(cfg.group)).data
    return Result(payload, rows=payload["elements"])


def run_kl(cfg):
    return Result(list(kl_rows(kl_table(cfg.group), cfg.w)))


def run_torus(cfg):
    context = {"ell": cfg.ell}

    def torus(w):
        return FixedTorusSerializer(fixed_torus(w, cfg.fd), context=context).data

    tori = map_elements(torus, _elements(cfg), cfg.workers)
    payload = {
        "label": cfg.datum.label,
        "q": cfg.fd.q,
        "encoding": CHARACTER_ENCODING,
        "tori": tori,
    }
    rows = [
        {"w": t["w"], "invariants": t["invariants"], **chi}
        for t in tori
        for chi in t["characters"]
    ]
    return Result(payload, rows=rows)


def run_series(cfg):
    modular_ell = cfg.ell if cfg.modular else None
    table = SeriesTable(cfg.fd, cfg.group, modular_ell=modular_ell)
    blocks = None
    if cfg.ell is not None and not cfg.modular:
        blocks = ell_blocks(cfg.fd, cfg.ell, table)
    payload = series_payload(cfg.fd, table.classes, blocks)
    rows = [
        {key: value for key, value in klass.items() if key != "members"}
        for klass in payload["classes"]
    ]
    return Result(payload, rows=rows)


def run_monokl(cfg):
    table = SeriesTable(cfg.fd, cfg.group)
    if cfg.block is None:
        classes = list(table.classes)
    else:
        classes = [_geometric_class(table, cfg.block)]
    blocks = [block_basis(klass, cfg.group) for klass in classes]
    per_block = map_elements(mono_rows, blocks, cfg.workers)
    rows = [row for block_rows in per_block for row in block_rows]
    if cfg.w is not None:
        rows = [row for row in rows if row["w"] == cfg.w.word_string()]
    payload = {
        "label": cfg.datum.label,
        "q": cfg.fd.q,
        "encoding": CHARACTER_ENCODING,
        "blocks": MonoBlockSerializer(blocks, many=True).data,
        "rows": rows,
    }
    return Result(payload, rows=rows)


def _duality_pairs(cfg):
    trivial = reduce_mod_one((0,) * cfg.datum.rank)
    if cfg.block is None:
        return [(w, trivial) for w in _elements(cfg)]
    if cfg.fd is None:
        raise ValidationError("Choosing a block needs q.", code="block_needs_q")
    table = SeriesTable(cfg.fd, cfg.group)
    block = block_basis(_geometric_class(table, cfg.block), cfg.group)
    return [(w, phi) for w, phi in block.basis if cfg.w is None or w == cfg.w]


def run_duality(cfg):
    kl_table(cfg.group)

    def check(pair):
        w, phi = pair
        row = {"w": w, "phi": phi, "expected_sign": _sign(w), "sign": None, "passed": False}
        try:
            report = duality_check(w, cfg.group, chi=phi, conjectural=cfg.conjectural, fd=cfg.fd)
        except IdentityViolation as exc:
            logger.warning(f"Duality fails at {w}: {exc}")
            return row
        row.update(sign=report.sign, passed=report.sign == report.expected_sign)
        return row

    rows = map_elements(check, _duality_pairs(cfg), cfg.workers)
    data = list(DualityRowSerializer(rows, many=True).data)
    return Result(data, failures=[row for row in data if not row["passed"]])


def run_trcheck(cfg):
    kl_table(cfg.group)
    char_table(cfg.group)

    def check(w):
        row = {"w": w, "sign": None, "trace": [], "twisted_character": [], "passed": False}
        try:
            report = tr_identity_check(w, cfg.group)
        except IdentityViolation as exc:
            logger.warning(f"Trace identity fails at {w}: {exc}")
            return row
        row.update(
            sign=report.sign,
            trace=report.trace,
            twisted_character=report.twisted_character,
            passed=report.sign == _sign(w),
        )
        return row

    rows = map_elements(check, _elements(cfg), cfg.workers)
    data = list(TraceRowSerializer(rows, many=True).data)
    return Result(data, failures=[row for row in data if not row["passed"]])


def run_dudasmalle(cfg):
    kl_table(cfg.group)

    def certify(w):
        try:
            certificates = dudas_malle_certificate(
                w, cfg.group, cfg.fd, cfg.ell, cfg.n_matrix, cfg.sqrt_choice
            )
        except IdentityViolation as exc:
            logger.warning(f"No certificate for {w}: {exc}")
            certificates = []
        payload = certificate_payload(w, cfg.fd, cfg.ell, cfg.sqrt_choice, certificates)
        if not certificates:
            payload["pass"] = False
        return payload

    payload = map_elements(certify, _elements(cfg), cfg.workers)
    rows = [
        {"w": entry["w"], **klass}
        for entry in payload
        for klass in entry["classes"]
    ]
    return Result(payload, rows=rows, failures=[entry for entry in payload if not entry["pass"]])


RUNNERS = {
    "group": run_group,
    "kl": run_kl,
    "torus": run_torus,
    "series": run_series,
    "monokl": run_monokl,
    "duality": run_duality,
    "trcheck": run_trcheck,
    "dudasmalle": run_dudasmalle,
}


def dispatch(cfg):
    """
    Run the command of a validated RunConfig.

    Raises:
        ValidationError: For arguments only the command itself can check.
        HeckeLabError: For errors that stop the whole computation, such as
            gated features or unsupported data.
    """
    logger.info(f"Running {cfg.command} on {cfg.datum.label} with {cfg.workers} worker(s)")
    result = RUNNERS[cfg.command](cfg)
    if result.failures:
        logger.warning(f"{cfg.command}: {len(result.failures)} check(s) failed")
    return result
