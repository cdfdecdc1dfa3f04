import json
import tempfile
from io import StringIO
from pathlib import Path
from unittest import mock

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase

from coxeter.groups import build_group
from coxeter.root_data import get_preset
from hecke.kl import kl_table
from hecke.serializers import table_from_rows


def run(name, **options):
    out = StringIO()
    call_command(name, stdout=out, stderr=StringIO(), **options)
    return out.getvalue()


class OutputTest(SimpleTestCase):

    def test_group(self):
        data = json.loads(run("group", preset="B2"))
        self.assertEqual(data["order"], 8)
        self.assertEqual(len(data["elements"]), 8)
        self.assertEqual(len(data["classes"]), 5)
        self.assertNotIn("character_table", data)

    def test_group_with_characters(self):
        data = json.loads(run("group", preset="A2", characters=True))
        self.assertEqual(sorted(data["character_table"]["degrees"]), [1, 1, 2])

    def test_kl_rows_below_longest(self):
        rows = json.loads(run("kl", preset="A2", w="s1s2s1"))
        self.assertEqual(len(rows), 6)
        self.assertTrue(all(row["type"] == "kl" for row in rows))
        self.assertEqual({row["w"] for row in rows}, {"1-2-1"})

    def test_kl_round_trip(self):
        group = build_group(get_preset("B2"))
        rows = json.loads(run("kl", preset="B2"))
        parsed = table_from_rows(group, rows)
        reference = kl_table(group)
        for w in group:
            for y in group.bruhat_interval(group.identity, w):
                self.assertEqual(parsed.h(y, w), reference.h(y, w))

    def test_kl_csv(self):
        lines = run("kl", preset="A1", output_format="csv").splitlines()
        self.assertEqual(lines[0], "h,h_tilde,type,w,y")
        self.assertEqual(len(lines), 4)

    def test_torus_requires_q(self):
        with self.assertRaises(CommandError) as cm:
            run("torus", preset="A1")
        self.assertEqual(cm.exception.returncode, 1)

    def test_torus_is_deterministic_across_workers(self):
        serial = run("torus", preset="A2", q=2, workers=1)
        parallel = run("torus", preset="A2", q=2, workers=4)
        self.assertEqual(serial, parallel)
        self.assertEqual(len(json.loads(serial)["tori"]), 6)

    def test_series_blocks(self):
        data = json.loads(run("series", preset="GL2", q=3, ell=2))
        self.assertEqual(data["pairs"], sum(c["size"] for c in data["classes"]))
        self.assertIn("blocks", data)

    def test_monokl_unknown_block(self):
        with self.assertRaises(CommandError) as cm:
            run("monokl", preset="A1", q=3, block=50)
        self.assertEqual(cm.exception.returncode, 1)

    def test_duality_g2(self):
        rows = json.loads(run("duality", preset="G2", q=2))
        self.assertEqual(len(rows), 12)
        for row in rows:
            self.assertTrue(row["passed"])
            self.assertEqual(row["sign"], (-1) ** row["length"])

    def test_trcheck_a2(self):
        rows = json.loads(run("trcheck", preset="A2", workers=3))
        self.assertEqual(len(rows), 6)
        self.assertTrue(all(row["passed"] for row in rows))

    def test_dudasmalle(self):
        data = json.loads(run("dudasmalle", preset="A1", q=3, ell=5, w="s"))
        self.assertEqual(len(data), 1)
        certificate = data[0]
        self.assertTrue(certificate["pass"])
        self.assertEqual([c["lambda_bar_id"] for c in certificate["classes"]], [0, 7])
        self.assertEqual([c["tilt_id"] for c in certificate["classes"]], [0, 1])


class ExitCodeTest(SimpleTestCase):

    def test_corrupt_n_matrix(self):
        with tempfile.TemporaryDirectory() as directory:
            path = Path(directory) / "n.json"
            path.write_text("{not json", encoding="utf-8")
            with self.assertRaises(CommandError) as cm:
                run("dudasmalle", preset="A1", q=3, ell=5, n_matrix=str(path))
        self.assertEqual(cm.exception.returncode, 1)

    def test_override_character_of_wrong_order(self):
        with tempfile.TemporaryDirectory() as directory:
            path = Path(directory) / "n.json"
            path.write_text(
                json.dumps({"overrides": [{"v": "e", "w": "s", "chi": [0, 4], "n": 1}]}),
                encoding="utf-8",
            )
            with self.assertRaises(CommandError) as cm:
                run("dudasmalle", preset="GL2", q=3, ell=7, w="s", n_matrix=str(path))
        self.assertEqual(cm.exception.returncode, 1)

    def test_ell_equal_to_characteristic(self):
        with self.assertRaises(CommandError) as cm:
            run("dudasmalle", preset="A1", q=9, ell=3)
        self.assertEqual(cm.exception.returncode, 1)

    def test_failed_identity_still_writes_artifact(self):
        out = StringIO()
        with mock.patch("dlchar.duality.alvis_curtis", side_effect=lambda u: u):
            with self.assertRaises(CommandError) as cm:
                call_command("duality", preset="A1", stdout=out, stderr=StringIO())
        self.assertEqual(cm.exception.returncode, 2)
        rows = json.loads(out.getvalue())
        self.assertEqual([row["passed"] for row in rows], [True, False])
        self.assertIsNone(rows[1]["sign"])

    def test_gated_block(self):
        with self.assertRaises(CommandError) as cm:
            run("duality", preset="A1", q=3, block=1)
        self.assertEqual(cm.exception.returncode, 3)

    def test_conjectural_block(self):
        rows = json.loads(run("duality", preset="A1", q=3, block=1, conjectural=True))
        self.assertTrue(rows)
        self.assertTrue(all(row["passed"] for row in rows))
