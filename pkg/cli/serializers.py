import json
from dataclasses import dataclass
from pathlib import Path

from django.conf import settings
from django.core.exceptions import ValidationError as DjangoValidationError
from rest_framework import serializers

from algebra.exceptions import UsageError
from coxeter.groups import build_group
from coxeter.root_data import get_preset, load_datum_file
from coxeter.serializers import WordField
from dlchar.k0 import ZERO_N_MATRIX, NMatrix
from dlchar.weights import CANONICAL, SQRT_CHOICES
from torus.frobenius import fixed_torus, frobenius_datum
from torus.validators import validate_ell

from .validators import (
    COMMANDS,
    NEEDS_ELL,
    NEEDS_Q,
    OUTPUT_FORMATS,
    validate_bruhat_pair,
    validate_multiplicity,
    validate_override_character,
    validate_workers,
)


class NMatrixEntrySerializer(serializers.Serializer):
    v = WordField()
    w = WordField()
    n = serializers.IntegerField(validators=[validate_multiplicity])

    def validate(self, attrs):
        validate_bruhat_pair(attrs["v"], attrs["w"], self.context["group"])
        return attrs


class NMatrixOverrideSerializer(NMatrixEntrySerializer):
    chi = serializers.ListField(child=serializers.IntegerField(min_value=0))

    def validate_chi(self, value):
        rank = self.context["group"].datum.rank
        if len(value) != rank:
            raise serializers.ValidationError(f"chi needs {rank} entries, got {len(value)}.")
        return tuple(value)


class NMatrixSerializer(serializers.Serializer):
    """The multiplicity file: {"entries": [{v, w, n}], "overrides": [{v, w, chi, n}]}."""

    entries = NMatrixEntrySerializer(many=True, required=False)
    overrides = NMatrixOverrideSerializer(many=True, required=False)

    def validate(self, attrs):
        seen = set()
        for row in attrs.get("entries", []):
            key = (row["v"], row["w"])
            if key in seen:
                raise serializers.ValidationError(f"Duplicate entry for ({row['v']}, {row['w']}).")
            seen.add(key)
        seen = set()
        for row in attrs.get("overrides", []):
            key = (row["v"], row["w"], row["chi"])
            if key in seen:
                raise serializers.ValidationError(
                    f"Duplicate override for ({row['v']}, {row['w']}, {list(row['chi'])})."
                )
            seen.add(key)
        return attrs

    def create(self, validated_data):
        return NMatrix(
            entries={(row["v"], row["w"]): row["n"] for row in validated_data.get("entries", [])},
            overrides={
                (row["v"], row["w"], row["chi"]): row["n"]
                for row in validated_data.get("overrides", [])
            },
        )


def load_n_matrix(path, group):
    """
    Read a multiplicity file; an empty file is the zero table.

    Raises:
        ValidationError: If the file is unreadable, not JSON, or violates
            the schema (negative n, v not below w, malformed words).
    """
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise DjangoValidationError(
            f"Cannot read n-matrix file {path}: {exc}", code="n_matrix_unreadable"
        )
    if not text.strip():
        return ZERO_N_MATRIX
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DjangoValidationError(
            f"n-matrix file {path} is not JSON: {exc}", code="n_matrix_not_json"
        )
    serializer = NMatrixSerializer(data=payload, context={"group": group})
    if not serializer.is_valid():
        raise DjangoValidationError(
            f"Invalid n-matrix file {path}: {serializer.errors}", code="invalid_n_matrix"
        )
    return serializer.save()


@dataclass(frozen=True)
class RunConfig:
    command: str
    group: object
    fd: object = None
    ell: int = None
    w: object = None
    block: int = None
    sqrt_choice: str = CANONICAL
    n_matrix: NMatrix = ZERO_N_MATRIX
    output_format: str = "json"
    workers: int = 1
    conjectural: bool = False
    modular: bool = False
    twisted: bool = False
    characters: bool = False

    @property
    def datum(self):
        return self.group.datum


def default_workers():
    return getattr(settings, "HECKELAB_WORKERS", 1)


def reduce_overrides(n_matrix, fd, ell):
    """
    Rewrite override characters in reduced form on T^wF and check that each
    has l-power order. Only possible once q and l are known.
    """
    if fd is None or ell is None:
        raise serializers.ValidationError({"n_matrix": "Character overrides need q and l."})
    overrides = {}
    for (v, w, values), n in n_matrix.overrides.items():
        chi = fixed_torus(w, fd).character(values)
        try:
            validate_override_character(chi, ell)
        except DjangoValidationError as exc:
            raise serializers.ValidationError({"n_matrix": exc.messages})
        key = (v, w, chi.values)
        if key in overrides:
            raise serializers.ValidationError(
                {"n_matrix": f"Duplicate override for v={v}, w={w}, chi={list(chi.values)}."}
            )
        overrides[key] = n
    return NMatrix(entries=n_matrix.entries, overrides=overrides)


class RunConfigSerializer(serializers.Serializer):
    """Validates one command invocation; ``save()`` returns a RunConfig."""

    command = serializers.ChoiceField(choices=COMMANDS)
    preset = serializers.CharField(required=False, allow_blank=True, allow_null=True)
    datum = serializers.CharField(required=False, allow_blank=True, allow_null=True)
    q = serializers.IntegerField(required=False, allow_null=True)
    ell = serializers.IntegerField(required=False, allow_null=True)
    delta = serializers.IntegerField(required=False, allow_null=True, min_value=1)
    w = serializers.CharField(required=False, allow_blank=True, allow_null=True)
    block = serializers.IntegerField(required=False, allow_null=True, min_value=0)
    sqrt_choice = serializers.ChoiceField(choices=SQRT_CHOICES, default=CANONICAL)
    n_matrix = serializers.CharField(required=False, allow_blank=True, allow_null=True)
    format = serializers.ChoiceField(choices=OUTPUT_FORMATS, default="json")
    workers = serializers.IntegerField(default=default_workers, validators=[validate_workers])
    conjectural = serializers.BooleanField(default=False)
    modular = serializers.BooleanField(default=False)
    twisted = serializers.BooleanField(default=False)
    characters = serializers.BooleanField(default=False)

    def validate(self, attrs):
        preset, path = attrs.get("preset"), attrs.get("datum")
        if bool(preset) == bool(path):
            raise serializers.ValidationError("Give exactly one of preset or datum.")
        root_datum = get_preset(preset) if preset else load_datum_file(path)
        group = build_group(root_datum)

        command, q, ell = attrs["command"], attrs.get("q"), attrs.get("ell")
        if command in NEEDS_Q and q is None:
            raise serializers.ValidationError({"q": f"{command} needs q."})
        if command in NEEDS_ELL and ell is None:
            raise serializers.ValidationError({"ell": f"{command} needs l."})
        if attrs["modular"] and ell is None:
            raise serializers.ValidationError({"ell": "The modular filter needs l."})
        fd = frobenius_datum(root_datum, q, attrs.get("delta")) if q is not None else None
        if ell is not None:
            validate_ell(ell, q)

        w = attrs.get("w")
        try:
            element = group.element(w) if w else None
        except UsageError as exc:
            raise serializers.ValidationError({"w": str(exc)})

        n_matrix = ZERO_N_MATRIX
        if attrs.get("n_matrix"):
            n_matrix = load_n_matrix(attrs["n_matrix"], group)
        if n_matrix.overrides:
            n_matrix = reduce_overrides(n_matrix, fd, ell)

        attrs.update(group=group, fd=fd, element=element, n_matrix_table=n_matrix)
        return attrs

    def create(self, validated_data):
        return RunConfig(
            command=validated_data["command"],
            group=validated_data["group"],
            fd=validated_data["fd"],
            ell=validated_data.get("ell"),
            w=validated_data["element"],
            block=validated_data.get("block"),
            sqrt_choice=validated_data["sqrt_choice"],
            n_matrix=validated_data["n_matrix_table"],
            output_format=validated_data["format"],
            workers=validated_data["workers"],
            conjectural=validated_data["conjectural"],
            modular=validated_data["modular"],
            twisted=validated_data["twisted"],
            characters=validated_data["characters"],
        )
