from django.test import SimpleTestCase, override_settings

from algebra.exceptions import UnsupportedError
from coxeter.characters import char_table, dixon_prime
from coxeter.groups import build_group
from coxeter.root_data import get_preset


class CharacterTableTest(SimpleTestCase):

    def test_a1(self):
        table = char_table(build_group(get_preset("A1")))
        self.assertEqual(table.values, ((1, 1), (1, -1)))

    def test_a2_degrees(self):
        table = char_table(build_group(get_preset("A2")))
        self.assertEqual(sorted(table.degrees), [1, 1, 2])

    def test_known_degrees(self):
        expected = {
            "B2": [1, 1, 1, 1, 2],
            "A3": [1, 1, 2, 3, 3],
            "G2": [1, 1, 1, 1, 2, 2],
            "B3": [1, 1, 1, 1, 2, 2, 3, 3, 3, 3],
        }
        for name, degrees in expected.items():
            table = char_table(build_group(get_preset(name)))
            self.assertEqual(sorted(table.degrees), degrees, name)

    def test_sum_of_squared_degrees(self):
        for name in ("A1", "A2", "A3", "B2", "B3", "G2", "GL2", "T1"):
            group = build_group(get_preset(name))
            table = char_table(group)
            self.assertEqual(sum(d * d for d in table.degrees), group.order, name)
            self.assertEqual(len(table.values), len(table.classes))

    def test_trivial_character_comes_first(self):
        group = build_group(get_preset("B3"))
        table = char_table(group)
        self.assertEqual(set(table.values[0]), {1})
        self.assertEqual(table.classes[0].representative, group.identity)

    def test_row_orthogonality_weighted_by_class_size(self):
        group = build_group(get_preset("G2"))
        table = char_table(group)
        sizes = [c.size for c in table.classes]
        for a, row_a in enumerate(table.values):
            for b, row_b in enumerate(table.values):
                product = sum(s * x * y for s, x, y in zip(sizes, row_a, row_b))
                self.assertEqual(product, group.order if a == b else 0)

    def test_twisted_table_is_unsupported(self):
        with self.assertRaises(UnsupportedError):
            char_table(build_group(get_preset("2A2")), twisted=True)

    @override_settings(HECKELAB_MAX_CHAR_TABLE_ORDER=10)
    def test_order_cap(self):
        with self.assertRaises(UnsupportedError):
            char_table(build_group(get_preset("A3")))

    def test_dixon_prime(self):
        p = dixon_prime(48, 12)
        self.assertEqual(p % 12, 1)
        self.assertGreater(p * p, 4 * 48)
