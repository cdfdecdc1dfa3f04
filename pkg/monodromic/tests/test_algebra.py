import random
from fractions import Fraction

from django.test import SimpleTestCase, tag

from algebra.exceptions import UsageError
from algebra.laurent import LaurentPoly, V, V_INV
from coxeter.groups import build_group
from coxeter.root_data import get_preset
from hecke.algebra import HeckeElem, bar, mul
from hecke.kl import kl_basis, kl_tilde
from monodromic.algebra import (
    MonoElem,
    block_basis,
    from_hecke,
    mono_b,
    mono_bar,
    mono_mul,
)
from monodromic.kl import mono_kl, mono_kl_tilde
from monodromic.serializers import MonoBlockSerializer, mono_rows
from torus.frobenius import frobenius_datum
from torus.series import SeriesTable

SEED = 11


def blocks(name, q):
    fd = frobenius_datum(get_preset(name), q)
    group = build_group(fd.datum)
    return group, [block_basis(klass, group) for klass in SeriesTable(fd)]


def random_mono(block, rng, terms=3):
    support = {}
    for _ in range(terms):
        w = rng.choice(block.group.elements)
        phi = rng.choice(block.orbit)
        support[(w, phi)] = LaurentPoly({e: rng.randint(-2, 2) for e in range(-1, 2)})
    return MonoElem(block, support)


class BlockBasisTest(SimpleTestCase):

    def test_trivial_block(self):
        group, (trivial, *_) = blocks("A2", 3)
        self.assertTrue(trivial.is_trivial())
        self.assertEqual(len(trivial.basis), 6)

    def test_a1_blocks(self):
        _, found = blocks("A1", 3)
        self.assertEqual([len(b.orbit) for b in found], [1, 2, 1])
        free, quadratic = found[1], found[2]
        self.assertEqual(free.orbit, ((Fraction(1, 4),), (Fraction(3, 4),)))
        self.assertEqual(len(free.basis), 4)
        self.assertFalse(free.fixes(1, free.orbit[0]))
        self.assertEqual(len(quadratic.basis), 2)
        self.assertTrue(quadratic.fixes(1, quadratic.orbit[0]))

    def test_basis_size_is_group_order_times_orbit(self):
        group, found = blocks("B2", 3)
        for block in found:
            self.assertEqual(len(block.basis), group.order * len(block.orbit))
            for w, phi in block.basis:
                self.assertIn(block.act(w, phi), block.orbit)

    def test_serializer(self):
        _, found = blocks("A1", 3)
        data = MonoBlockSerializer(found[1]).data
        self.assertEqual(data["orbit"], [["1/4"], ["3/4"]])
        self.assertEqual(data["size"], 4)
        self.assertEqual(data["stabilizers"], [[], []])


class MonoMultiplicationTest(SimpleTestCase):

    def setUp(self):
        self.group, found = blocks("A1", 3)
        self.free, self.quadratic = found[1], found[2]
        self.s = self.group.simple(1)

    def test_idempotents_are_orthogonal(self):
        a, b = self.free.orbit
        one_a = MonoElem.idempotent(self.free, a)
        self.assertTrue(mono_mul(one_a, MonoElem.idempotent(self.free, b)).is_zero())
        self.assertEqual(mono_mul(one_a, one_a), one_a)

    def test_quadratic_relation(self):
        (phi,) = self.quadratic.orbit
        h_s = MonoElem.basis(self.quadratic, self.s, phi)
        expected = MonoElem.idempotent(self.quadratic, phi) + h_s.scale(V_INV - V)
        self.assertEqual(mono_mul(h_s, h_s), expected)

    def test_free_relation(self):
        a, b = self.free.orbit
        product = mono_mul(
            MonoElem.basis(self.free, self.s, b), MonoElem.basis(self.free, self.s, a)
        )
        self.assertEqual(product, MonoElem.idempotent(self.free, a))
        wrong_order = mono_mul(
            MonoElem.basis(self.free, self.s, a), MonoElem.basis(self.free, self.s, a)
        )
        self.assertTrue(wrong_order.is_zero())

    def test_unit(self):
        rng = random.Random(SEED)
        unit = MonoElem.unit(self.free)
        for _ in range(4):
            m = random_mono(self.free, rng)
            self.assertEqual(mono_mul(unit, m), m)
            self.assertEqual(mono_mul(m, unit), m)

    def test_associativity_in_every_block(self):
        rng = random.Random(SEED)
        for name, q in (("A2", 3), ("B2", 2), ("GL2", 3)):
            _, found = blocks(name, q)
            for block in found:
                for _ in range(3):
                    a, b, c = (random_mono(block, rng) for _ in range(3))
                    self.assertEqual(
                        mono_mul(mono_mul(a, b), c), mono_mul(a, mono_mul(b, c))
                    )

    def test_cross_block_products(self):
        one_free = MonoElem.idempotent(self.free, self.free.orbit[0])
        one_quadratic = MonoElem.idempotent(self.quadratic, self.quadratic.orbit[0])
        with self.assertRaises(UsageError):
            mono_mul(one_free, one_quadratic)
        with self.assertLogs("monodromic.algebra", level="WARNING"):
            self.assertTrue(mono_mul(one_free, one_quadratic, permissive=True).is_zero())


class MonoBarTest(SimpleTestCase):

    def setUp(self):
        self.group, found = blocks("A1", 3)
        self.free, self.quadratic = found[1], found[2]
        self.s = self.group.simple(1)

    def test_idempotents_are_fixed(self):
        for block in (self.free, self.quadratic):
            for phi in block.orbit:
                one = MonoElem.idempotent(block, phi)
                self.assertEqual(mono_bar(one), one)

    def test_free_generator_is_self_dual(self):
        h_s = MonoElem.basis(self.free, self.s, self.free.orbit[0])
        self.assertEqual(mono_bar(h_s), h_s)

    def test_quadratic_generator(self):
        (phi,) = self.quadratic.orbit
        h_s = MonoElem.basis(self.quadratic, self.s, phi)
        one = MonoElem.idempotent(self.quadratic, phi)
        self.assertEqual(mono_bar(h_s), h_s + one.scale(V - V_INV))

    def test_involution(self):
        rng = random.Random(SEED)
        for name, q in (("A2", 3), ("B2", 3)):
            _, found = blocks(name, q)
            for block in found:
                m = random_mono(block, rng)
                self.assertEqual(mono_bar(mono_bar(m)), m)


class MonoKLTest(SimpleTestCase):

    def test_rank_one_examples(self):
        group, found = blocks("A1", 3)
        free, quadratic = found[1], found[2]
        s = group.simple(1)
        for block in (free, quadratic):
            for phi in block.orbit:
                self.assertEqual(
                    mono_kl(block, group.identity, phi), MonoElem.idempotent(block, phi)
                )
        (phi,) = quadratic.orbit
        self.assertEqual(
            mono_kl(quadratic, s, phi),
            MonoElem.basis(quadratic, s, phi) + MonoElem.idempotent(quadratic, phi).scale(V),
        )
        for phi in free.orbit:
            self.assertEqual(mono_kl(free, s, phi), MonoElem.basis(free, s, phi))
            self.assertEqual(mono_kl_tilde(free, s, phi), MonoElem.basis(free, s, phi))

    def test_trivial_block_is_the_hecke_algebra(self):
        rng = random.Random(SEED)
        for name in ("A1", "A2", "A3", "B2", "B3", "G2", "GL2"):
            group, (trivial, *_) = blocks(name, 2)
            for w in group:
                self.assertEqual(mono_kl(trivial, w, trivial.orbit[0]), from_hecke(trivial, kl_basis(w, group)))
                self.assertEqual(mono_kl_tilde(trivial, w, trivial.orbit[0]), from_hecke(trivial, kl_tilde(w, group)))
                h_w = HeckeElem.basis(group, w)
                self.assertEqual(mono_bar(from_hecke(trivial, h_w)), from_hecke(trivial, bar(h_w)))
            for _ in range(3):
                x = HeckeElem(group, {rng.choice(group.elements): LaurentPoly.monomial(rng.randint(-2, 2)) for _ in range(3)})
                y = HeckeElem(group, {rng.choice(group.elements): LaurentPoly.monomial(rng.randint(-2, 2)) for _ in range(3)})
                self.assertEqual(
                    mono_mul(from_hecke(trivial, x), from_hecke(trivial, y)),
                    from_hecke(trivial, mul(x, y)),
                )

    def check_self_duality_and_degree_bounds(self, name, q):
        group, found = blocks(name, q)
        for block in found:
            for w, phi in block.basis:
                with self.subTest(name=name, q=q, w=w, phi=phi):
                    basis = mono_kl(block, w, phi)
                    tilde = mono_kl_tilde(block, w, phi)
                    self.assertEqual(mono_bar(basis), basis)
                    self.assertEqual(mono_bar(tilde), tilde)
                    self.assertEqual(basis.coefficient(w, phi), 1)
                    for (y, psi), c in basis.items():
                        if (y, psi) != (w, phi):
                            self.assertTrue(group.bruhat_lt(y, w))
                            self.assertGreaterEqual(c.min_degree, 1)
                    for (y, psi), c in tilde.items():
                        if (y, psi) != (w, phi):
                            self.assertLessEqual(c.max_degree, -1)
                    self.assertEqual(mono_b(basis), tilde)

    def test_self_duality_and_degree_bounds(self):
        for name in ("A1", "A2", "B2", "GL2", "SL2", "2A2"):
            for q in (2, 3):
                self.check_self_duality_and_degree_bounds(name, q)

    @tag("slow")
    def test_self_duality_and_degree_bounds_rank_three_and_g2(self):
        for name in ("A3", "B3", "G2"):
            for q in (2, 3):
                self.check_self_duality_and_degree_bounds(name, q)

    def test_rows(self):
        group, found = blocks("A1", 3)
        rows = mono_rows(found[2])
        self.assertEqual(len(rows), 3)
        self.assertEqual(rows[1]["w"], "1")
        self.assertEqual(rows[1]["y"], "")
        self.assertEqual(rows[1]["h"], {"1": 1})
        self.assertEqual(rows[1]["phi"], ["1/2"])
        self.assertEqual(rows[1]["psi"], ["1/2"])
        # 1/2 is the character of order 2 on T^sF = Z/4 and on T^F = Z/2
        self.assertEqual(rows[1]["chi"], [2])
        self.assertEqual(rows[1]["chi_y"], [1])

    def test_rows_outside_the_fixed_torus(self):
        group, found = blocks("A1", 3)
        # 1/4 is fixed by F_s = -3 but not by F = 3
        for row in mono_rows(found[1]):
            self.assertEqual(row["chi"] is None, row["w"] == "")
            self.assertEqual(row["chi_y"] is None, row["y"] == "")
