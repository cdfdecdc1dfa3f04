from rest_framework import serializers

from algebra.serializers import LaurentPolyField
from coxeter.serializers import WordField

from .kl import KLTable


class KLRowSerializer(serializers.Serializer):
    """
    One KL table entry. Reading a row back needs the group in the context
    so words can be resolved to elements.
    """

    type = serializers.CharField(default="kl")
    w = WordField()
    y = WordField()
    h = LaurentPolyField()
    h_tilde = LaurentPolyField()

    def validate_type(self, value):
        if value != "kl":
            raise serializers.ValidationError("Not a KL row.")
        return value

    def validate(self, attrs):
        group = self.context["group"]
        if not group.bruhat_leq(attrs["y"], attrs["w"]):
            raise serializers.ValidationError(
                f"{attrs['y']} is not below {attrs['w']} in the Bruhat order."
            )
        return attrs


def kl_rows(table, w=None):
    data = [
        {"type": "kl", "w": target, "y": y, "h": h, "h_tilde": ht}
        for target, y, h, ht in table.rows(w)
    ]
    return KLRowSerializer(data, many=True).data


def table_from_rows(group, rows):
    """
    Parse serialized KL rows into a fresh KLTable.

    Raises:
        rest_framework.exceptions.ValidationError: If a row is malformed.
    """
    serializer = KLRowSerializer(data=rows, many=True, context={"group": group})
    serializer.is_valid(raise_exception=True)
    records = [
        {
            "w": row["w"].word,
            "y": row["y"].word,
            "h": row["h"].to_dict(),
            "h_tilde": row["h_tilde"].to_dict(),
        }
        for row in serializer.validated_data
    ]
    return KLTable(group).load_records(records)
