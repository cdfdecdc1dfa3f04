from django.test import SimpleTestCase

from coxeter.groups import build_group
from coxeter.root_data import get_preset
from torus.frobenius import characters, fixed_torus, frobenius_datum
from torus.oracles import pair_orbit_count
from torus.serializers import series_payload
from torus.series import SeriesTable, act, ell_blocks, geometric_classes


class GeometricClassTest(SimpleTestCase):

    def test_gl2_counts(self):
        for q, expected in ((3, 6), (2, 2)):
            fd = frobenius_datum(get_preset("GL2"), q)
            self.assertEqual(len(geometric_classes(fd)), expected)
            self.assertEqual(pair_orbit_count(fd), expected)

    def test_torus_without_roots(self):
        fd = frobenius_datum(get_preset("T1"), 3)
        self.assertEqual(len(geometric_classes(fd)), 2)
        self.assertEqual(pair_orbit_count(fd), 2)

    def test_counts_agree_with_pair_orbits(self):
        for name, q in (("SL2", 3), ("A1", 2), ("A2", 2), ("B2", 2), ("2A2", 2), ("GL2", 4)):
            fd = frobenius_datum(get_preset(name), q)
            self.assertEqual(len(geometric_classes(fd)), pair_orbit_count(fd), (name, q))

    def test_partition_of_all_pairs(self):
        for name, q in (("A2", 3), ("B2", 3), ("2A2", 3)):
            fd = frobenius_datum(get_preset(name), q)
            group = build_group(fd.datum)
            table = SeriesTable(fd)
            members = [(chi.w, chi.values) for klass in table for chi in klass.members]
            self.assertEqual(len(members), len(set(members)))
            self.assertEqual(
                len(members), sum(fixed_torus(w, fd).order for w in group)
            )

    def test_unipotent_class(self):
        fd = frobenius_datum(get_preset("B2"), 3)
        group = build_group(fd.datum)
        table = SeriesTable(fd)
        unipotent = table.unipotent_class()
        self.assertTrue(unipotent.is_unipotent())
        self.assertEqual(unipotent.position, 0)
        self.assertEqual(
            {chi.w for chi in unipotent.members}, set(group.elements)
        )
        self.assertTrue(all(chi.is_trivial() for chi in unipotent.members))

    def test_w_equivariance(self):
        for name in ("A2", "2A2", "GL2"):
            fd = frobenius_datum(get_preset(name), 3)
            group = build_group(fd.datum)
            by_matrix = {x.matrix: x for x in group}
            tau, tau_inverse = fd.tau_matrix, fd.tau_matrix.inverse()
            table = SeriesTable(fd)
            for w in group:
                for chi in characters(fixed_torus(w, fd)):
                    for x in group:
                        x_inverse = group.invert(x).matrix
                        shifted = by_matrix[tau_inverse @ x.matrix @ tau @ w.matrix @ x_inverse]
                        image = fixed_torus(shifted, fd).character_from_phi(act(chi.phi, x_inverse))
                        self.assertEqual(table.class_of(image), table.class_of(chi))

    def test_modular_filter(self):
        fd = frobenius_datum(get_preset("GL2"), 3)
        classes = geometric_classes(fd, modular_ell=2)
        self.assertEqual(len(classes), 1)
        self.assertTrue(classes[0].is_unipotent())


class EllBlockTest(SimpleTestCase):

    def test_blocks_partition_classes(self):
        fd = frobenius_datum(get_preset("GL2"), 3)
        table = SeriesTable(fd)
        for ell in (2, 5, 7):
            blocks = ell_blocks(fd, ell, table)
            positions = sorted(k.position for block in blocks for k in block.classes)
            self.assertEqual(positions, list(range(len(table))))

    def test_all_classes_share_the_unipotent_block_at_two(self):
        # T^{wF} are 2-groups for GL2 over F_3
        fd = frobenius_datum(get_preset("GL2"), 3)
        blocks = ell_blocks(fd, 2)
        self.assertEqual(len(blocks), 1)
        self.assertEqual(blocks[0].semisimple.position, 0)

    def test_blocks_are_classes_for_coprime_ell(self):
        fd = frobenius_datum(get_preset("GL2"), 3)
        self.assertEqual(len(ell_blocks(fd, 5)), 6)


class SeriesPayloadTest(SimpleTestCase):

    def test_payload(self):
        fd = frobenius_datum(get_preset("GL2"), 2)
        classes = geometric_classes(fd)
        payload = series_payload(fd, classes)
        self.assertEqual(payload["pairs"], 4)
        self.assertEqual(len(payload["classes"]), 2)
        self.assertEqual(payload["classes"][0]["phi"], ["0", "0"])
        self.assertTrue(payload["classes"][0]["unipotent"])
        self.assertEqual(payload["classes"][0]["members"][0], {"w": "", "chi": [0, 0]})
