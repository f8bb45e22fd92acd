from pysemiext.green_ext import (
    GreenCharReport,
    brute_related,
    char_D,
    char_H,
    char_J,
    char_L,
    char_R,
    cross_check_green,
    eggbox_export,
    labelwise_h,
    mismatches,
)
from pysemiext.extension import ZERO, ExtElement, ExtensionSemigroup
from pysemiext.semigroup import green
from pysemiext.errors import BaseNotMonoid
from pysemiext.zoo import MONOID_ZOO, builtin

import unittest

# T2 element indices
ID, SWAP, C0, C1 = 0, 1, 2, 3


def el(*triples):
    return ExtElement.of(triples)


class TestCaseCharacterizations(unittest.TestCase):
    def setUp(self):
        self.E1 = ExtensionSemigroup(2, 1, builtin("T2"))
        self.E2 = ExtensionSemigroup(2, 2, builtin("T2"))

    def test_right_and_left(self):
        alpha, beta = el((0, C0, 0)), el((0, C1, 1))
        self.assertEqual(char_R(self.E1, alpha, beta), (True, (1,)))
        self.assertTrue(brute_related(self.E1, "R", alpha, beta))
        self.assertEqual(char_L(self.E1, alpha, beta), (False, None))
        self.assertFalse(brute_related(self.E1, "L", alpha, beta))
        self.assertEqual(char_L(self.E1, el((0, ID, 1)), el((1, SWAP, 1))), (True, (1,)))

    def test_d_and_j(self):
        self.assertEqual(char_D(self.E1, el((0, C0, 0)), el((1, C1, 1))), (True, (1,)))
        self.assertEqual(char_J(self.E1, el((0, C0, 0)), el((1, C1, 1))), (True, (1,)))
        self.assertEqual(char_D(self.E1, el((0, ID, 0)), el((0, C0, 0))), (False, None))
        self.assertFalse(brute_related(self.E1, "D", el((0, ID, 0)), el((0, C0, 0))))

    def test_special_cases(self):
        self.assertEqual(char_R(self.E2, ZERO, ZERO), (True, ()))
        self.assertEqual(char_D(self.E2, ZERO, el((0, ID, 0))), (False, None))
        self.assertEqual(char_J(self.E2, el((0, ID, 0)), el((0, ID, 0), (1, ID, 1))), (False, None))

    def test_h_needs_two_permutations(self):
        alpha = el((0, ID, 0), (1, SWAP, 1))
        beta = el((0, SWAP, 1), (1, ID, 0))
        related, witness = char_H(self.E2, alpha, beta)
        self.assertTrue(related)
        self.assertEqual(witness, ((1, 2), (2, 1)))
        self.assertTrue(brute_related(self.E2, "H", alpha, beta))
        self.assertFalse(labelwise_h(self.E2, alpha, beta))
        self.assertTrue(labelwise_h(self.E2, alpha, alpha))

    def test_search_is_lexicographic(self):
        alpha = el((0, C0, 0), (1, C1, 1))
        beta = el((0, C1, 1), (1, C0, 0))
        self.assertEqual(char_D(self.E2, alpha, beta), (True, (1, 2)))

    def test_base_must_be_monoid(self):
        E = ExtensionSemigroup(2, 1, builtin("null2"))
        with self.assertRaises(BaseNotMonoid):
            char_R(E, el((0, 1, 0)), el((0, 1, 1)))


class TestCaseCrossCheck(unittest.TestCase):
    def test_monoid_zoo(self):
        for name in MONOID_ZOO:
            for n in (1, 2):
                E = ExtensionSemigroup(2, n, builtin(name))
                reports = cross_check_green(E)
                self.assertEqual(len(reports), 5 * E.count() ** 2)
                self.assertEqual(mismatches(reports), [], f"{name} n={n}")

    def test_three_points(self):
        E = ExtensionSemigroup(3, 2, builtin("Z2"))
        self.assertEqual(mismatches(cross_check_green(E, relations=("R", "H"))), [])

    def test_report(self):
        report = GreenCharReport("R", ZERO, el((0, 1, 1)), False, True, None)
        self.assertFalse(report.agrees)
        self.assertEqual(
            report.to_json(),
            {
                "relation": "R",
                "alpha": {"zero": True},
                "beta": {"triples": [[0, 1, 1]]},
                "char_result": False,
                "brute_result": True,
                "witness": None,
            },
        )


class TestCaseEggbox(unittest.TestCase):
    def test_T2(self):
        S = builtin("T2")
        text = eggbox_export(green(S), list(S.names))
        self.assertTrue(text.startswith("digraph eggbox {"))
        self.assertIn("subgraph cluster_0", text)
        self.assertIn("subgraph cluster_1", text)
        self.assertNotIn("cluster_2", text)
        self.assertIn("<TR><TD>id swap</TD></TR>", text)
        self.assertIn("<TR><TD>c0</TD><TD>c1</TD></TR>", text)
        self.assertEqual(text, eggbox_export(green(S), list(S.names)))

    def test_names_are_escaped(self):
        text = eggbox_export(green(builtin("min2")), ["<0>", "a&b"], title="chain")
        self.assertTrue(text.startswith("digraph chain {"))
        self.assertIn("<TD>&lt;0&gt;</TD>", text)
        self.assertIn("<TD>a&amp;b</TD>", text)


if __name__ == "__main__":
    unittest.main()
