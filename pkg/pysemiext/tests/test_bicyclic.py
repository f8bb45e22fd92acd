from pysemiext.bicyclic import (
    ONE,
    P,
    Q,
    BicyclicElement,
    BicyclicMonoid,
    bc_green,
    bc_mul,
    bounded_witness_search,
    elements_up_to,
    qp,
    verify_h_example,
)
from pysemiext.extension import ExtElement, ExtensionSemigroup
from pysemiext.green_ext import char_D, char_R
from pysemiext.semigroup import RELATIONS
from pysemiext.errors import InfiniteCarrier, ParameterTooSmall
from itertools import product

import unittest


class TestCaseBicyclic(unittest.TestCase):
    def test_product(self):
        self.assertEqual(P * Q, ONE)
        self.assertEqual(Q * P, qp(1, 1))
        self.assertEqual(bc_mul(qp(2, 1), qp(3, 4)), qp(4, 4))
        self.assertEqual(bc_mul(qp(1, 3), qp(2, 0)), qp(1, 1))
        grid = list(elements_up_to(3))
        self.assertEqual(len(grid), 16)
        for a, b, c in product(grid, repeat=3):
            self.assertEqual((a * b) * c, a * (b * c))

    def test_words(self):
        self.assertEqual(str(ONE), "1")
        self.assertEqual(str(P), "p")
        self.assertEqual(str(qp(1, 2)), "qp^2")
        self.assertEqual(str(qp(2, 0)), "q^2")
        with self.assertRaises(ValueError):
            BicyclicElement(-1, 0)

    def test_monoid(self):
        B = BicyclicMonoid()
        self.assertEqual(B.identity, ONE)
        self.assertIsNone(B.zero)
        self.assertEqual(B.multiply(P, Q), ONE)
        with self.assertRaises(InfiniteCarrier):
            B.elements()
        E = ExtensionSemigroup(2, 2, B)
        self.assertFalse(E.is_finite)
        with self.assertRaises(InfiniteCarrier):
            E.count()


class TestCaseGreen(unittest.TestCase):
    def test_closed_forms(self):
        u, v = qp(2, 1), qp(2, 3)
        self.assertEqual(bc_green(u, v, "R"), (True, (qp(1, 3), qp(3, 1))))
        self.assertEqual(bc_green(u, v, "L"), (False, None))
        self.assertEqual(bc_green(u, v, "H"), (False, None))
        self.assertEqual(bc_green(u, u, "H"), (True, (ONE, ONE)))
        related, witness = bc_green(qp(0, 4), qp(3, 0), "D")
        self.assertTrue(related)
        self.assertEqual(witness[0], qp(0, 0))
        related, witness = bc_green(qp(0, 4), qp(3, 0), "J")
        (x, y), _ = witness
        self.assertEqual(x * qp(0, 4) * y, qp(3, 0))

    def test_bounded_search_agrees(self):
        small = list(elements_up_to(2))
        for u, v in product(small, repeat=2):
            for relation in RELATIONS:
                closed = bc_green(u, v, relation, bound=3)[0]
                found = bounded_witness_search(u, v, relation, bound=3) is not None
                self.assertEqual(closed, found, f"{u} {v} {relation}")

    def test_unknown_relation(self):
        with self.assertRaises(ValueError):
            bc_green(ONE, ONE, "X")

    def test_extension_over_bicyclic(self):
        E = ExtensionSemigroup(2, 1, BicyclicMonoid())
        alpha = ExtElement.of([(0, qp(1, 1), 1)])
        beta = ExtElement.of([(0, qp(1, 4), 0)])
        self.assertEqual(char_R(E, alpha, beta), (True, (1,)))
        self.assertEqual(char_D(E, alpha, ExtElement.of([(1, qp(5, 0), 0)])), (True, (1,)))
        self.assertEqual(E.multiply(alpha, ExtElement.of([(1, P, 0)])), ExtElement.of([(0, qp(1, 2), 0)]))


class TestCaseHClassExample(unittest.TestCase):
    def test_report(self):
        report = verify_h_example()
        self.assertEqual(report["status"], "SUCCESSFUL", report["checks"])
        self.assertTrue(all(report["checks"].values()))
        self.assertEqual(report["elements"]["alpha"], "[(0,qp,0),(1,q^2p^2,1)]")
        self.assertEqual(report["elements"]["beta"], "[(0,qp^2,1),(1,q^2p,0)]")
        self.assertEqual(report["elements"]["delta"], "[(0,p,1),(1,q,0)]")
        self.assertEqual(len(report["factorizations"]), 4)
        self.assertEqual(report["witnesses"]["H"], ((1, 2), (2, 1)))
        for pairing in report["label_pairings"]:
            self.assertEqual(pairing["h_related"], [False, False])

    def test_larger_extension(self):
        self.assertEqual(verify_h_example(4, 3)["status"], "SUCCESSFUL")

    def test_needs_two_points(self):
        for lam, n in [(1, 1), (2, 1)]:
            with self.assertRaises(ParameterTooSmall):
                verify_h_example(lam, n)


if __name__ == "__main__":
    unittest.main()
