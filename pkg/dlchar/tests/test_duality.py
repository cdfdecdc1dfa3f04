from unittest import mock

from django.test import SimpleTestCase

from algebra.exceptions import GatedFeatureError, IdentityViolation, UnsupportedError
from coxeter.groups import build_group
from coxeter.root_data import get_preset
from dlchar.duality import duality_check, tr_identity_check
from torus.frobenius import frobenius_datum
from torus.series import SeriesTable

PRESETS = ("A1", "A2", "A3", "B2", "B3", "G2", "GL2", "SL2", "2A2")


def expected_sign(w):
    return -1 if w.length % 2 else 1


class DualityCheckTest(SimpleTestCase):

    def test_rank_one(self):
        group = build_group(get_preset("A1"))
        self.assertEqual(duality_check(group.identity, group).sign, 1)
        self.assertEqual(duality_check(group.simple(1), group).sign, -1)

    def test_g2(self):
        group = build_group(get_preset("G2"))
        reports = [duality_check(w, group) for w in group]
        self.assertEqual(len(reports), 12)
        for report in reports:
            self.assertEqual(report.sign, expected_sign(report.w))
            self.assertEqual(report.sign, report.expected_sign)

    def test_every_preset(self):
        for name in PRESETS:
            group = build_group(get_preset(name))
            for w in group:
                self.assertEqual(duality_check(w, group).sign, expected_sign(w), (name, w))

    def test_sabotaged_duality_is_loud(self):
        group = build_group(get_preset("A1"))
        with mock.patch("dlchar.duality.alvis_curtis", side_effect=lambda u: u):
            self.assertEqual(duality_check(group.identity, group).sign, 1)
            with self.assertRaises(IdentityViolation):
                duality_check(group.simple(1), group)


class MonodromicDualityTest(SimpleTestCase):

    def test_gated_without_flag(self):
        fd = frobenius_datum(get_preset("A1"), 3)
        table = SeriesTable(fd)
        chi = table.classes[1].representative
        with self.assertRaises(GatedFeatureError):
            duality_check(chi.w, table.group, chi=chi)

    def test_signs_in_every_block(self):
        for name, q in (("A1", 3), ("A2", 2), ("B2", 3), ("GL2", 3)):
            fd = frobenius_datum(get_preset(name), q)
            table = SeriesTable(fd)
            for klass in table:
                for chi in klass.members:
                    report = duality_check(chi.w, table.group, chi=chi, conjectural=True)
                    self.assertEqual(report.sign, expected_sign(chi.w), (name, q, chi))


class TraceIdentityTest(SimpleTestCase):

    def test_small_examples(self):
        group = build_group(get_preset("A1"))
        identity = tr_identity_check(group.identity, group)
        self.assertEqual(identity.sign, 1)
        self.assertEqual(identity.trace, (1, 0))
        reflection = tr_identity_check(group.simple(1), group)
        self.assertEqual(reflection.sign, -1)
        self.assertEqual(reflection.trace, (1, 1))
        self.assertEqual(reflection.twisted_character, (-1, -1))

    def test_longest_element_of_a2(self):
        group = build_group(get_preset("A2"))
        self.assertEqual(tr_identity_check(group.longest, group).sign, -1)

    def test_sign_pattern(self):
        for name in ("A1", "A2", "B2", "A3"):
            group = build_group(get_preset(name))
            for w in group:
                self.assertEqual(tr_identity_check(w, group).sign, expected_sign(w), (name, w))

    def test_twisted_datum(self):
        group = build_group(get_preset("2A2"))
        with self.assertRaises(UnsupportedError):
            tr_identity_check(group.identity, group)
