from rest_framework import serializers

from algebra.serializers import FFElemField, FractionField, LaurentPolyField
from coxeter.serializers import WordField


class UniformTermSerializer(serializers.Serializer):
    w = WordField()
    chi = serializers.ListField(child=FractionField())
    c = LaurentPolyField()


class UniformVirtualField(serializers.Field):
    """A UniformVirtual as a list of {w, chi, c} terms in group order."""

    def to_representation(self, value):
        terms = [{"w": w, "chi": phi, "c": c} for (w, phi), c in value.items()]
        return UniformTermSerializer(terms, many=True).data

    def to_internal_value(self, data):
        raise serializers.ValidationError("Virtual characters are output only.")


class DualityRowSerializer(serializers.Serializer):
    type = serializers.CharField(default="duality")
    w = WordField()
    chi = serializers.ListField(source="phi", child=FractionField())
    length = serializers.IntegerField(source="w.length")
    sign = serializers.IntegerField(allow_null=True)
    expected_sign = serializers.IntegerField()
    passed = serializers.BooleanField(default=True)


class TraceRowSerializer(serializers.Serializer):
    type = serializers.CharField(default="trcheck")
    w = WordField()
    length = serializers.IntegerField(source="w.length")
    sign = serializers.IntegerField(allow_null=True)
    trace = serializers.ListField(child=FractionField())
    twisted_character = serializers.ListField(child=FractionField())
    passed = serializers.BooleanField(default=True)


class ProjCertificateSerializer(serializers.Serializer):
    lambda_bar_id = serializers.IntegerField()
    eigenvalue = FFElemField()
    ic_component = UniformVirtualField()
    dual = UniformVirtualField()
    tilt_id = serializers.IntegerField()
    tilt_component = UniformVirtualField()
    sign = serializers.IntegerField()
    passed = serializers.BooleanField()

    def to_representation(self, instance):
        data = super().to_representation(instance)
        data["pass"] = data.pop("passed")
        return data


def certificate_payload(w, fd, ell, sqrt_choice, certificates):
    """The certificate artifact of one element w."""
    return {
        "w": w.word_string(),
        "q": fd.q,
        "l": ell,
        "sqrt_choice": sqrt_choice,
        "classes": ProjCertificateSerializer(certificates, many=True).data,
        "pass": all(c.passed for c in certificates),
    }
