import itertools

from django.core.exceptions import ValidationError
from django.test import SimpleTestCase, override_settings

from algebra.exceptions import InfiniteGroupError, UsageError
from algebra.matrices import IntMatrix
from coxeter.groups import WeylGroup, build_group, parse_word
from coxeter.root_data import adjoint_datum, get_preset, make_root_datum

EXPECTED_ORDERS = {"A1": 2, "A2": 6, "A3": 24, "B2": 8, "B3": 48, "G2": 12}
EXPECTED_LONGEST = {"A1": 1, "A2": 3, "A3": 6, "B2": 4, "B3": 9, "G2": 6}


def closure_size(group):
    """Closure of the simple reflections under right multiplication."""
    reached = {group.identity}
    frontier = [group.identity]
    while frontier:
        x = frontier.pop()
        for i in range(1, group.rank + 1):
            y = group.right_multiply(x, i)
            if y not in reached:
                reached.add(y)
                frontier.append(y)
    return len(reached)


class BuildGroupTest(SimpleTestCase):

    def test_preset_orders(self):
        for name, order in EXPECTED_ORDERS.items():
            group = build_group(get_preset(name))
            self.assertEqual(group.order, order, name)
            self.assertEqual(closure_size(group), order, name)
            self.assertEqual(len(set(group.elements)), order, name)

    def test_longest_element_is_unique_maximum(self):
        for name, length in EXPECTED_LONGEST.items():
            group = build_group(get_preset(name))
            self.assertEqual(group.longest.length, length, name)
            self.assertEqual(
                sum(1 for x in group if x.length == length), 1, name
            )

    def test_torus_and_gl2(self):
        self.assertEqual(build_group(get_preset("T1")).order, 1)
        self.assertEqual(build_group(get_preset("GL2")).order, 2)

    def test_affine_cartan_matrix_exceeds_cap(self):
        affine = adjoint_datum("A1-affine", [[2, -2], [-2, 2]])
        with self.assertRaises(InfiniteGroupError):
            WeylGroup(affine, element_cap=200)

    @override_settings(HECKELAB_ELEMENT_CAP=10)
    def test_cap_comes_from_settings(self):
        with self.assertRaises(InfiniteGroupError):
            WeylGroup(get_preset("A3"))

    def test_malformed_cartan_is_rejected(self):
        with self.assertRaises(ValidationError):
            adjoint_datum("bad", [[2, 1], [-1, 2]])
        with self.assertRaises(ValidationError):
            adjoint_datum("bad", [[2, -1], [0, 2]])
        with self.assertRaises(ValidationError):
            adjoint_datum("bad", [[3]])

    def test_inconsistent_roots_are_rejected(self):
        with self.assertRaises(ValidationError):
            make_root_datum("bad", [[2]], coroots=[[1], [0]], roots=[[1, -1]])


class WordTest(SimpleTestCase):

    def setUp(self):
        self.a2 = build_group(get_preset("A2"))

    def test_parse_word_formats(self):
        self.assertEqual(parse_word("s1s2s1"), (1, 2, 1))
        self.assertEqual(parse_word("1-2-1"), (1, 2, 1))
        self.assertEqual(parse_word("121"), (1, 2, 1))
        self.assertEqual(parse_word("e"), ())
        self.assertEqual(parse_word(""), ())
        with self.assertRaises(UsageError):
            parse_word("x1")

    def test_braid_relation_gives_same_canonical_form(self):
        self.assertEqual(self.a2.element("s1s2s1"), self.a2.element("s2s1s2"))
        self.assertEqual(self.a2.element("s2s1s2").word, (1, 2, 1))

    def test_canonical_word_is_lex_least_reduced(self):
        for name in ("A3", "B2", "G2"):
            group = build_group(get_preset(name))
            for x in group:
                if x.length > 5:
                    continue
                reduced = [
                    word
                    for word in itertools.product(range(1, group.rank + 1), repeat=x.length)
                    if group.element(word) == x
                ]
                self.assertEqual(x.word, min(reduced))

    def test_action_matrix_is_product_of_reflections(self):
        group = build_group(get_preset("B3"))
        reflections = group.datum.reflection_matrices
        for x in group:
            matrix = IntMatrix.identity(group.datum.rank)
            for i in x.word:
                matrix = matrix @ reflections[i - 1]
            self.assertEqual(x.matrix, matrix)

    def test_out_of_range_generator(self):
        with self.assertRaises(UsageError):
            self.a2.element("1-3")

    def test_bare_s_in_rank_one(self):
        a1 = build_group(get_preset("A1"))
        self.assertEqual(a1.element("s"), a1.simple(1))
        with self.assertRaises(UsageError):
            self.a2.element("s")


class MultiplicationTest(SimpleTestCase):

    def test_involutions(self):
        a2 = build_group(get_preset("A2"))
        s = a2.simple(1)
        self.assertEqual(a2.multiply(s, s), a2.identity)

    def test_longest_element_squares_to_identity(self):
        b2 = build_group(get_preset("B2"))
        self.assertEqual(b2.multiply(b2.longest, b2.longest), b2.identity)

    def test_length_parity_and_inverse(self):
        group = build_group(get_preset("A3"))
        for x in group:
            self.assertEqual(group.multiply(x, group.invert(x)), group.identity)
            for y in group:
                self.assertEqual(
                    group.multiply(x, y).length % 2, (x.length + y.length) % 2
                )

    def test_descents_of_inverse(self):
        for name in ("A3", "B3", "G2"):
            group = build_group(get_preset(name))
            for x in group:
                self.assertEqual(
                    group.left_descents(x), group.right_descents(group.invert(x))
                )

    def test_mixed_groups_are_rejected(self):
        a2 = build_group(get_preset("A2"))
        b2 = build_group(get_preset("B2"))
        with self.assertRaises(UsageError):
            a2.multiply(a2.simple(1), b2.simple(1))


class BruhatOrderTest(SimpleTestCase):

    def setUp(self):
        self.a2 = build_group(get_preset("A2"))

    def test_identity_is_below_everything(self):
        for w in self.a2:
            self.assertTrue(self.a2.bruhat_leq(self.a2.identity, w))

    def test_small_examples(self):
        s1, s2 = self.a2.simple(1), self.a2.simple(2)
        self.assertTrue(self.a2.bruhat_leq(s1, self.a2.element("s1s2")))
        self.assertFalse(self.a2.bruhat_leq(s1, s2))

    def test_descent_table_and_lifting_agree(self):
        for name in ("A3", "B2", "G2"):
            group = build_group(get_preset(name))
            for y in group:
                for w in group:
                    self.assertEqual(
                        group.bruhat_leq(y, w), group.bruhat_leq_by_lifting(y, w)
                    )

    def test_subword_criterion_agrees_on_every_pair(self):
        for name in ("A3", "B3"):
            group = build_group(get_preset(name))
            for w in group:
                for y in group:
                    by_subword = group.bruhat_leq_by_subword(y, w)
                    self.assertEqual(by_subword, group.bruhat_leq_by_lifting(y, w), (name, y, w))
                    self.assertEqual(by_subword, group.bruhat_leq(y, w), (name, y, w))

    def test_subword_products(self):
        w0 = self.a2.longest
        self.assertEqual(len(self.a2.subword_products(w0)), 6)
        s1s2 = self.a2.element("s1s2")
        self.assertEqual(
            self.a2.subword_products(s1s2),
            {self.a2.identity, self.a2.simple(1), self.a2.simple(2), s1s2},
        )

    def test_partial_order_refining_length(self):
        group = build_group(get_preset("A3"))
        elements = list(group)
        for x in elements:
            for y in elements:
                if group.bruhat_leq(x, y) and group.bruhat_leq(y, x):
                    self.assertEqual(x, y)
                if group.bruhat_lt(x, y):
                    self.assertLess(x.length, y.length)

    def test_interval(self):
        w0 = self.a2.longest
        self.assertEqual(len(self.a2.bruhat_interval(self.a2.identity, w0)), 6)
        self.assertEqual(len(self.a2.bruhat_interval(self.a2.simple(1), w0)), 4)


class ConjugacyClassTest(SimpleTestCase):

    def test_class_counts(self):
        for name, count in (("A1", 2), ("A2", 3), ("B2", 5), ("A3", 5), ("G2", 6), ("B3", 10)):
            group = build_group(get_preset(name))
            classes = group.conjugacy_classes()
            self.assertEqual(len(classes), count, name)
            self.assertEqual(sum(c.size for c in classes), group.order)
            self.assertEqual(classes[0].members, (group.identity,))

    def test_sign_is_constant_on_classes(self):
        group = build_group(get_preset("B3"))
        for klass in group.conjugacy_classes():
            self.assertEqual(len({x.length % 2 for x in klass.members}), 1)

    def test_twisted_classes(self):
        group = build_group(get_preset("2A2"))
        classes = group.conjugacy_classes(twisted=True)
        self.assertEqual(sum(c.size for c in classes), 6)
        # x ~ w x tau(w)^-1 has three classes for the unitary twist of S3
        self.assertEqual(len(classes), 3)
        for klass in classes:
            for x in klass.members:
                for w in group:
                    conjugate = group.multiply(
                        group.multiply(w, x), group.invert(group.tau(w))
                    )
                    self.assertIn(conjugate, klass.members)
