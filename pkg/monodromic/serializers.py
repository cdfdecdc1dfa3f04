from rest_framework import serializers

from algebra.serializers import FractionField, LaurentPolyField
from coxeter.serializers import WordField
from torus.frobenius import fixed_torus

from .kl import block_rows


class BlockRowSerializer(serializers.Serializer):
    """
    One coefficient of a block KL basis element.

    ``phi`` and ``psi`` are points of Hom(X_*, Q/Z). ``chi`` and ``chi_y``
    are the same points as characters of T^wF and T^yF in the torus
    encoding, or null where the point is not fixed by F_w (resp. F_y).
    """

    type = serializers.CharField(default="monokl")
    block = serializers.IntegerField()
    w = WordField()
    phi = serializers.ListField(child=FractionField())
    chi = serializers.ListField(child=serializers.IntegerField(), allow_null=True)
    y = WordField()
    psi = serializers.ListField(child=FractionField())
    chi_y = serializers.ListField(child=serializers.IntegerField(), allow_null=True)
    h = LaurentPolyField()
    h_tilde = LaurentPolyField()


class MonoBlockSerializer(serializers.Serializer):
    block = serializers.IntegerField(source="geom_class.position")
    orbit = serializers.ListField(child=serializers.ListField(child=FractionField()))
    size = serializers.IntegerField()
    stabilizers = serializers.SerializerMethodField()

    def get_stabilizers(self, obj):
        return [
            [i for i in range(1, obj.group.rank + 1) if obj.fixes(i, phi)]
            for phi in obj.orbit
        ]


def character_values(w, phi, fd):
    torus = fixed_torus(w, fd)
    if not torus.contains(phi):
        return None
    return list(torus.character_from_phi(phi).values)


def mono_rows(block):
    fd = block.geom_class.representative.torus.fd
    data = [
        {
            "type": "monokl",
            "block": block.geom_class.position,
            "w": w,
            "phi": phi,
            "chi": character_values(w, phi, fd),
            "y": y,
            "psi": psi,
            "chi_y": character_values(y, psi, fd),
            "h": h,
            "h_tilde": ht,
        }
        for w, phi, y, psi, h, ht in block_rows(block)
    ]
    return BlockRowSerializer(data, many=True).data
