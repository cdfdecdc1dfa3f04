from rest_framework import serializers

from algebra.serializers import FractionField
from coxeter.serializers import WordField

from .frobenius import CHARACTER_ENCODING, characters, ell_part_split


class TorusCharacterSerializer(serializers.Serializer):
    chi = serializers.ListField(source="values", child=serializers.IntegerField())
    order = serializers.IntegerField()
    phi = serializers.ListField(child=FractionField())
    chi_l = serializers.SerializerMethodField()
    chi_l_prime = serializers.SerializerMethodField()

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        if self.context.get("ell") is None:
            self.fields.pop("chi_l")
            self.fields.pop("chi_l_prime")

    def _split(self, obj):
        return ell_part_split(obj, self.context["ell"])

    def get_chi_l(self, obj):
        return list(self._split(obj)[0].values)

    def get_chi_l_prime(self, obj):
        return list(self._split(obj)[1].values)


class FixedTorusSerializer(serializers.Serializer):
    w = WordField()
    invariants = serializers.ListField(child=serializers.IntegerField())
    order = serializers.IntegerField()
    characters = serializers.SerializerMethodField()

    def get_characters(self, obj):
        return TorusCharacterSerializer(characters(obj), many=True, context=self.context).data


class PairSerializer(serializers.Serializer):
    w = WordField()
    chi = serializers.ListField(source="values", child=serializers.IntegerField())


class GeomClassSerializer(serializers.Serializer):
    id = serializers.IntegerField(source="position")
    phi = serializers.ListField(child=FractionField())
    unipotent = serializers.BooleanField(source="is_unipotent")
    size = serializers.IntegerField()
    members = PairSerializer(many=True)


class EllBlockSerializer(serializers.Serializer):
    id = serializers.IntegerField(source="position")
    semisimple = serializers.IntegerField(source="semisimple.position")
    classes = serializers.SerializerMethodField()
    size = serializers.IntegerField()

    def get_classes(self, obj):
        return [klass.position for klass in obj.classes]


def series_payload(fd, classes, blocks=None):
    """The series table with its order metadata."""
    payload = {
        "label": fd.datum.label,
        "q": fd.q,
        "delta": fd.delta,
        "encoding": CHARACTER_ENCODING,
        "pairs": sum(klass.size for klass in classes),
        "classes": GeomClassSerializer(classes, many=True).data,
    }
    if blocks is not None:
        payload["blocks"] = EllBlockSerializer(blocks, many=True).data
    return payload
