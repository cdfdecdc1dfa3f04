from fractions import Fraction

from django.test import SimpleTestCase

from algebra.exceptions import InvalidModulusError, UnsupportedError
from algebra.finite_fields import FFElem
from algebra.laurent import V, V_INV
from coxeter.groups import build_group
from coxeter.root_data import get_preset, presets
from dlchar.k0 import IC, NMatrix, k0_class
from dlchar.serializers import certificate_payload
from dlchar.uniform import UniformVirtual, ch_map
from dlchar.weights import OTHER, dudas_malle_certificate, weight_partition
from torus.frobenius import frobenius_datum

ZERO_POINT = (Fraction(0),)


def rho(w, c=1):
    return UniformVirtual({(w, ZERO_POINT): c})


class WeightPartitionTest(SimpleTestCase):

    def setUp(self):
        self.group = build_group(get_preset("A1"))
        self.e, self.s = self.group.identity, self.group.simple(1)
        self.ic_s = ch_map(k0_class(IC, self.s, self.group))

    def test_single_class_when_root_reduces_to_one(self):
        partition = weight_partition(self.ic_s, 3, 2)
        self.assertEqual(partition.period, 1)
        self.assertEqual(partition.ids, [0])
        self.assertEqual(partition.classes[0].exponents, (-1, 0))

    def test_period_eight(self):
        partition = weight_partition(self.ic_s, 3, 5)
        self.assertEqual(partition.period, 8)
        self.assertEqual(partition.ids, [0, 7])
        self.assertEqual(partition.component(0), rho(self.s))
        self.assertEqual(partition.component(7), rho(self.e, -V_INV))
        self.assertTrue(partition.component(3).is_zero())

    def test_period_six(self):
        partition = weight_partition(rho(self.e, V**5 + V**6 + V**11), 2, 7)
        self.assertEqual(partition.root, FFElem(7, 3))
        self.assertEqual(partition.period, 6)
        self.assertEqual(partition.ids, [0, 5])
        self.assertEqual(partition.classes[1].exponents, (5, 11))
        self.assertEqual(partition.classes[1].eigenvalue, FFElem(7, 3) ** 5)

    def test_other_square_root(self):
        partition = weight_partition(rho(self.e, V), 2, 7, sqrt_choice=OTHER)
        self.assertEqual(partition.root, FFElem(7, 4))
        self.assertEqual(partition.period, 3)

    def test_delta_scales_the_root(self):
        self.assertEqual(weight_partition(self.ic_s, 3, 5, delta=2).period, 4)

    def test_components_sum_back(self):
        u = rho(self.e, V_INV**3 + 2 * V + V**9) + rho(self.s, V**4 - 1)
        for q, ell in ((3, 2), (3, 5), (2, 7), (2, 5), (3, 7)):
            partition = weight_partition(u, q, ell)
            self.assertEqual(partition.total(), u)
            exponents = [e for klass in partition.classes for e in klass.exponents]
            self.assertEqual(sorted(exponents), u.exponents())

    def test_no_reduction_gives_singletons(self):
        u = rho(self.e, V_INV**3 + 2 * V) + rho(self.s, V**4)
        partition = weight_partition(u, 3, None)
        self.assertEqual(partition.ids, [-3, 1, 4])
        self.assertTrue(all(len(klass.exponents) == 1 for klass in partition.classes))

    def test_ell_equal_to_p(self):
        with self.assertRaises(InvalidModulusError):
            weight_partition(self.ic_s, 3, 3)
        with self.assertRaises(InvalidModulusError):
            weight_partition(self.ic_s, 9, 3)


class CertificateTest(SimpleTestCase):

    def setUp(self):
        self.fd = frobenius_datum(get_preset("A1"), 3)
        self.group = build_group(self.fd.datum)
        self.e, self.s = self.group.identity, self.group.simple(1)

    def test_identity(self):
        for ell in (2, 5, 7):
            (certificate,) = dudas_malle_certificate(self.e, self.group, self.fd, ell)
            self.assertTrue(certificate.passed)
            self.assertEqual(certificate.sign, 1)

    def test_reflection_at_five(self):
        certificates = dudas_malle_certificate(self.s, self.group, self.fd, 5)
        self.assertEqual([c.lambda_bar_id for c in certificates], [0, 7])
        self.assertEqual([c.tilt_id for c in certificates], [0, 1])
        self.assertTrue(all(c.passed for c in certificates))
        first, second = certificates
        self.assertEqual(first.dual, -rho(self.s))
        self.assertEqual(second.dual, rho(self.e, -V))
        self.assertEqual(second.tilt_component, rho(self.e, V))
        self.assertTrue(second.diff().is_zero())

    def test_reflection_at_two(self):
        (certificate,) = dudas_malle_certificate(self.s, self.group, self.fd, 2)
        self.assertTrue(certificate.passed)
        self.assertEqual(certificate.sign, -1)

    def test_every_split_preset(self):
        names = [name for name, datum in presets().items() if datum.is_split]
        for name in names:
            for q in (2, 3):
                fd = frobenius_datum(get_preset(name), q)
                group = build_group(fd.datum)
                for ell in (2, 5, 7):
                    if ell == fd.p:
                        continue
                    for w in group:
                        certificates = dudas_malle_certificate(w, group, fd, ell)
                        self.assertTrue(all(c.passed for c in certificates), (name, q, ell, w))

    def test_nonzero_multiplicities_break_certificates(self):
        fd = frobenius_datum(get_preset("A2"), 2)
        group = build_group(fd.datum)
        w = group.longest
        n_matrix = NMatrix(entries={(group.element("s1"), w): 1})
        with self.assertLogs("dlchar.weights", level="WARNING"):
            certificates = dudas_malle_certificate(w, group, fd, 5, n_matrix=n_matrix)
        self.assertFalse(all(c.passed for c in certificates))

    def test_twisted_datum(self):
        fd = frobenius_datum(get_preset("2A2"), 2)
        group = build_group(fd.datum)
        with self.assertRaises(UnsupportedError):
            dudas_malle_certificate(group.identity, group, fd, 5)

    def test_payload(self):
        certificates = dudas_malle_certificate(self.s, self.group, self.fd, 5)
        payload = certificate_payload(self.s, self.fd, 5, "canonical", certificates)
        self.assertEqual(payload["w"], "1")
        self.assertEqual(payload["q"], 3)
        self.assertEqual(payload["l"], 5)
        self.assertTrue(payload["pass"])
        self.assertEqual(len(payload["classes"]), 2)
        first = payload["classes"][0]
        self.assertEqual(first["lambda_bar_id"], 0)
        self.assertEqual(first["sign"], -1)
        self.assertTrue(first["pass"])
        self.assertEqual(first["eigenvalue"], "1")
        self.assertEqual(
            [dict(term) for term in first["dual"]], [{"w": "1", "chi": ["0"], "c": {"0": -1}}]
        )
