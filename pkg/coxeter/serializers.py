from django.core.exceptions import ValidationError as DjangoValidationError
from rest_framework import serializers
from sympy import Matrix

from algebra.exceptions import UsageError

from .root_data import make_root_datum
from .validators import validate_cartan_matrix, validate_integer_matrix


class IntegerMatrixField(serializers.ListField):
    child = serializers.ListField(child=serializers.IntegerField())


class RootDatumSerializer(serializers.Serializer):
    """Validates a datum JSON payload; ``save()`` returns a RootDatum."""

    name = serializers.CharField(required=False)
    label = serializers.CharField(max_length=64)
    cartan = IntegerMatrixField(allow_empty=True, validators=[validate_cartan_matrix])
    coroots = IntegerMatrixField(allow_empty=True)
    roots = IntegerMatrixField(required=False, allow_empty=True)
    tau = serializers.ListField(child=serializers.IntegerField(min_value=1), required=False)
    tau_matrix = IntegerMatrixField(required=False)

    def validate(self, attrs):
        cartan = attrs["cartan"]
        coroots = attrs["coroots"]
        n = len(cartan)
        rank = len(coroots)
        try:
            validate_integer_matrix(coroots, cols=n, name="coroots")
            if "roots" in attrs:
                validate_integer_matrix(attrs["roots"], rows=n, cols=rank, name="roots")
            else:
                attrs["roots"] = self._derive_roots(cartan, coroots)
            datum = make_root_datum(
                attrs["label"],
                cartan,
                coroots,
                attrs["roots"],
                tau=attrs.get("tau"),
                tau_matrix=attrs.get("tau_matrix"),
                rank=rank,
            )
        except DjangoValidationError as exc:
            raise serializers.ValidationError(exc.messages)
        attrs["datum"] = datum
        return attrs

    @staticmethod
    def _derive_roots(cartan, coroots):
        """Solve roots @ coroots = cartan^T when the coroots form a basis."""
        n, rank = len(cartan), len(coroots)
        if n == 0:
            return []
        if rank != n:
            raise DjangoValidationError(
                "roots are required when the torus rank differs from the semisimple rank.",
                code="roots_required",
            )
        inverse = Matrix(coroots).inv() if Matrix(coroots).det() != 0 else None
        if inverse is None:
            raise DjangoValidationError("coroots are linearly dependent.", code="coroots_singular")
        roots = Matrix(cartan).T * inverse
        if any(not x.is_integer for x in roots):
            raise DjangoValidationError(
                "coroots do not span a lattice compatible with integral roots.",
                code="roots_not_integral",
            )
        return [[int(roots[i, j]) for j in range(n)] for i in range(n)]

    def create(self, validated_data):
        return validated_data["datum"]


class WordField(serializers.Field):
    """A Weyl group element as hyphen-joined generator indices."""

    def to_representation(self, value):
        return value.word_string()

    def to_internal_value(self, data):
        group = self.context.get("group")
        if group is None:
            raise serializers.ValidationError("A group is required to parse words.")
        try:
            return group.element(data)
        except UsageError as exc:
            raise serializers.ValidationError(str(exc))


class ElementSerializer(serializers.Serializer):
    w = WordField(source="*")
    length = serializers.IntegerField()
    left_descents = serializers.SerializerMethodField()
    right_descents = serializers.SerializerMethodField()

    def get_left_descents(self, obj):
        return list(self.context["group"].left_descents(obj))

    def get_right_descents(self, obj):
        return list(self.context["group"].right_descents(obj))


class ConjugacyClassSerializer(serializers.Serializer):
    position = serializers.IntegerField()
    representative = WordField()
    size = serializers.IntegerField()
    members = serializers.ListField(child=WordField())


class GroupSerializer(serializers.Serializer):
    """Enumeration summary for the ``group`` command."""

    label = serializers.CharField(source="datum.label")
    order = serializers.IntegerField()
    longest = WordField()
    longest_length = serializers.IntegerField(source="longest.length")
    elements = serializers.SerializerMethodField()
    bruhat = serializers.SerializerMethodField()
    classes = serializers.SerializerMethodField()

    def get_elements(self, obj):
        context = {**self.context, "group": obj}
        return ElementSerializer(obj.elements, many=True, context=context).data

    def get_bruhat(self, obj):
        return [[int(flag) for flag in row] for row in obj.bruhat_matrix]

    def get_classes(self, obj):
        twisted = self.context.get("twisted", False)
        return ConjugacyClassSerializer(obj.conjugacy_classes(twisted), many=True).data


class CharacterTableSerializer(serializers.Serializer):
    classes = serializers.SerializerMethodField()
    degrees = serializers.ListField(child=serializers.IntegerField())
    values = serializers.ListField(child=serializers.ListField(child=serializers.IntegerField()))

    def get_classes(self, obj):
        return [c.representative.word_string() for c in obj.classes]
