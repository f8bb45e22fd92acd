from pysemiext.extension import (
    ZERO,
    ExtElement,
    ExtensionSemigroup,
    box,
    box_star,
    box_star_closed,
    brandt_extension,
    brandt_iso,
    check_associativity,
    congruence_witness,
    embed_power,
    embed_power_map,
    equiv0,
    equiv0_literal,
    equivalence_witness,
    ext_product,
    identity_labeled,
    inverse_partner,
    is_idempotent_brute,
    is_idempotent_fast,
    is_regular_brute,
    is_regular_fast,
    j0_ideal,
    nonzero_support,
    quotient,
    random_element,
    rank_ideal,
    restriction,
    s_extension,
    sandwich,
    stratum,
    transport,
    tuple_image,
    upset,
)
from pysemiext.partial import PartialInjection, SymmetricInverseSemigroup
from pysemiext.semigroup import direct_power, is_ideal, is_morphism, regularity
from pysemiext.errors import (
    ArityMismatch,
    BaseHasNoZero,
    BaseNotMonoid,
    DuplicatePoints,
    ForeignElement,
    InvalidParameters,
    NotAnInversePair,
    RankExceeded,
    SizeGuardExceeded,
)
from pysemiext.zoo import ZOO, builtin

import random
import unittest


def el(*triples):
    return ExtElement.of(triples)


class TestCaseElements(unittest.TestCase):
    def test_counts(self):
        min2, chain3 = builtin("min2"), builtin("chain3")
        for lam, n, S, expected in [
            (2, 1, min2, 9),
            (2, 2, min2, 17),
            (3, 2, min2, 91),
            (3, 2, chain3, 190),
            (1, 1, builtin("trivial"), 2),
        ]:
            E = ExtensionSemigroup(lam, n, S)
            self.assertEqual(E.count(), expected)
            self.assertEqual(len(E.elements()), expected)
            self.assertEqual(len(set(E.elements())), expected)

    def test_enumeration_order(self):
        E = ExtensionSemigroup(2, 1, builtin("min2"))
        self.assertEqual(
            [str(a) for a in E.elements()],
            ["0", "[(0,0,0)]", "[(0,1,0)]", "[(0,0,1)]", "[(0,1,1)]",
             "[(1,0,0)]", "[(1,1,0)]", "[(1,0,1)]", "[(1,1,1)]"],
        )

    def test_parameters(self):
        for lam, n in [(2, 3), (2, 0), (0, 0)]:
            with self.assertRaises(InvalidParameters):
                ExtensionSemigroup(lam, n, builtin("min2"))
        with self.assertRaises(SizeGuardExceeded):
            ExtensionSemigroup(3, 2, builtin("chain3"), guard=100).elements()

    def test_element_shape(self):
        alpha = el((1, 0, 0), (0, 1, 1))
        self.assertEqual(alpha.triples, ((0, 1, 1), (1, 0, 0)))
        self.assertEqual((alpha.domain, alpha.image, alpha.labels, alpha.rank), ((0, 1), (1, 0), (1, 0), 2))
        self.assertIs(el(), ZERO)
        self.assertEqual(ZERO.rank, 0)
        self.assertEqual(alpha.to_json(), {"triples": [[0, 1, 1], [1, 0, 0]]})
        self.assertEqual(ZERO.to_json(), {"zero": True})
        self.assertEqual(alpha.render(), "[ 0 1 ]\n[ 1 0 ]\n[ 1 0 ]")
        with self.assertRaises(DuplicatePoints):
            el((0, 1, 1), (1, 1, 1))


class TestCaseProduct(unittest.TestCase):
    def setUp(self):
        self.E = ExtensionSemigroup(3, 2, builtin("chain3"))

    def test_chains_multiply_labels(self):
        alpha = el((0, 2, 1), (2, 1, 0))
        beta = el((1, 1, 2), (0, 2, 1))
        # 0 -> 1 -> 2 with min(2, 1) and 2 -> 0 -> 1 with min(1, 2)
        self.assertEqual(ext_product(self.E, alpha, beta), el((0, 1, 2), (2, 1, 1)))
        self.assertEqual(ext_product(self.E, el((0, 2, 1)), el((0, 2, 1))), ZERO)
        self.assertEqual(ext_product(self.E, ZERO, alpha), ZERO)

    def test_foreign_elements(self):
        with self.assertRaises(ForeignElement):
            ext_product(self.E, el((0, 1, 5)), ZERO)
        with self.assertRaises(ForeignElement):
            ext_product(self.E, el((0, 7, 1)), ZERO)
        with self.assertRaises(ForeignElement):
            ext_product(self.E, el((0, 1, 0), (1, 1, 1), (2, 1, 2)), ZERO)
        with self.assertRaises(ForeignElement):
            self.E.check("[(0,1,1)]")
        self.assertFalse(self.E.contains(el((0, 1, 5))))

    def test_identity_and_zero(self):
        E = ExtensionSemigroup(2, 2, builtin("min2"))
        self.assertEqual(E.identity, el((0, 1, 0), (1, 1, 1)))
        self.assertIsNone(ExtensionSemigroup(2, 1, builtin("min2")).identity)
        self.assertIsNone(ExtensionSemigroup(2, 2, builtin("null2")).identity)
        m = E.materialize()
        self.assertEqual(m.semigroup.zero, m.index_of(ZERO))
        self.assertEqual(m.semigroup.identity, m.index_of(E.identity))

    def test_associativity(self):
        E = ExtensionSemigroup(2, 1, builtin("T2"))
        report = check_associativity(E)
        self.assertEqual((report["mode"], report["witness"]), ("exhaustive", None))
        report = check_associativity(self.E, seed=3, limit=10, samples=200)
        self.assertEqual(report, {"mode": "random", "checked": 200, "witness": None})

    def test_random_element(self):
        rng = random.Random(0)
        for _ in range(50):
            self.assertTrue(self.E.contains(random_element(self.E, rng)))


class TestCasePredicates(unittest.TestCase):
    def test_fast_matches_brute(self):
        for name in ZOO:
            E = ExtensionSemigroup(2, 2, builtin(name))
            for alpha in E.elements():
                self.assertEqual(is_idempotent_fast(E, alpha), is_idempotent_brute(E, alpha), f"{name} {alpha}")
                self.assertEqual(is_regular_fast(E, alpha), is_regular_brute(E, alpha), f"{name} {alpha}")

    def test_flags_follow_the_base(self):
        for name in ZOO:
            S = builtin(name)
            base = regularity(S)
            extended = regularity(ExtensionSemigroup(2, 2, S).materialize().semigroup)
            for flag in ("is_regular", "is_orthodox", "is_inverse"):
                self.assertEqual(base[flag], extended[flag], f"{flag} on {name}")

    def test_inverse_partner(self):
        E = ExtensionSemigroup(2, 1, builtin("Z2"))
        self.assertEqual(inverse_partner(E, el((0, 1, 1)), {0: 0, 1: 1}), el((1, 1, 0)))
        self.assertEqual(inverse_partner(E, ZERO, {}), ZERO)
        with self.assertRaises(NotAnInversePair):
            inverse_partner(ExtensionSemigroup(2, 1, builtin("min2")), el((0, 1, 1)), {1: 0})


class TestCaseCongruence(unittest.TestCase):
    def setUp(self):
        self.E = ExtensionSemigroup(2, 1, builtin("min2"))

    def test_j0(self):
        J0 = j0_ideal(self.E)
        self.assertEqual(len(J0), 5)
        self.assertTrue(is_ideal(self.E, J0))
        self.assertEqual(len(j0_ideal(ExtensionSemigroup(2, 2, builtin("min2")))), 7)
        with self.assertRaises(BaseHasNoZero):
            j0_ideal(ExtensionSemigroup(2, 1, builtin("Z2")))

    def test_support_relation(self):
        E = ExtensionSemigroup(2, 2, builtin("min2"))
        self.assertEqual(nonzero_support(E, el((0, 0, 0), (1, 1, 1))), frozenset({(1, 1, 1)}))
        self.assertTrue(equiv0(E, el((0, 0, 0), (1, 1, 1)), el((1, 1, 1))))
        self.assertTrue(equiv0(E, el((0, 0, 1)), ZERO))
        self.assertFalse(equiv0(E, el((0, 1, 1)), el((0, 1, 0))))
        self.assertIsNone(equivalence_witness(E, equiv0))
        self.assertIsNone(congruence_witness(E, equiv0))

    def test_coordinatewise_reading_fails(self):
        self.assertIsNone(equivalence_witness(self.E, equiv0_literal))
        self.assertEqual(
            congruence_witness(self.E, equiv0_literal),
            (el((0, 1, 0)), el((0, 1, 1)), el((0, 1, 0)), "right"),
        )

    def test_quotient(self):
        Q = quotient(self.E)
        self.assertEqual(Q.semigroup.size, 5)
        self.assertEqual(Q.class_of(ZERO), 0)
        self.assertEqual(Q.classes[0], j0_ideal(self.E))
        self.assertEqual(Q.semigroup.zero, 0)
        self.assertTrue(regularity(Q.semigroup)["is_inverse"])
        Q = quotient(ExtensionSemigroup(2, 2, builtin("chain3")))
        # nonzero-labeled partial bijections over {e, 1} plus the zero class
        self.assertEqual(Q.semigroup.size, 1 + 4 * 2 + 2 * 4)


class TestCaseBoxes(unittest.TestCase):
    def setUp(self):
        self.S = builtin("min2")
        self.E = ExtensionSemigroup(2, 2, self.S)

    def test_embedding(self):
        self.assertEqual(embed_power(self.E, (1, 0), (0, 1)), el((0, 1, 0), (1, 0, 1)))
        embedding = embed_power_map(self.E, (1, 0))
        self.assertTrue(is_morphism(embedding, direct_power(self.S, 2), self.E))
        self.assertEqual(len(set(embedding.values())), 4)
        with self.assertRaises(ArityMismatch):
            embed_power(self.E, (1,), (0, 1))

    def test_box(self):
        B = box(self.E, [{0, 1}, {1}], (0, 1), (1, 0))
        self.assertEqual(B, frozenset({el((0, 0, 1), (1, 1, 0)), el((0, 1, 1), (1, 1, 0))}))
        self.assertEqual(tuple_image(self.E, [(1, 0)], (1, 0), (0, 1)), frozenset({el((1, 1, 0), (0, 0, 1))}))
        with self.assertRaises(DuplicatePoints):
            tuple_image(self.E, [(1, 1)], (0, 0), (0, 1))
        with self.assertRaises(RankExceeded):
            box_star(ExtensionSemigroup(3, 1, self.S), [(1, 1)], 2)

    def test_box_star_and_ranks(self):
        self.assertEqual(len(box_star(self.E, [(1,)], 1)), 4)
        self.assertEqual(len(box_star(self.E, [(1, 1)], 2)), 2)
        self.assertEqual(len(stratum(self.E, 2)), 8)
        self.assertEqual(len(rank_ideal(self.E, 0)), 1)
        self.assertEqual(len(rank_ideal(self.E, 1)), 9)
        for k in range(3):
            self.assertTrue(is_ideal(self.E, rank_ideal(self.E, k)))

    def test_sandwich_and_transport(self):
        E = ExtensionSemigroup(2, 1, self.S)
        self.assertEqual(identity_labeled(E, (0,), (1,)), el((0, 1, 1)))
        self.assertEqual(sandwich(E, el((0, 0, 0)), (0,), (0,)), el((0, 0, 0)))
        self.assertEqual(sandwich(E, el((1, 1, 0)), (0,), (0,)), ZERO)
        self.assertEqual(upset(E, (0,), (0,)), frozenset({el((0, 0, 0)), el((0, 1, 0))}))
        self.assertEqual(transport(E, el((0, 1, 0)), ((0,), (0,)), ((1,), (1,))), el((1, 1, 1)))
        with self.assertRaises(BaseNotMonoid):
            identity_labeled(ExtensionSemigroup(2, 1, builtin("null2")), (0,))

    def test_upset_full_rank(self):
        full = [self.S.elements()] * 2
        top = upset(self.E, (0, 1), (0, 1))
        self.assertEqual(len(top), 4)
        self.assertEqual(top, box(self.E, full, (0, 1), (0, 1)))
        swap = el((0, 1, 1), (1, 0, 0))
        self.assertNotIn(swap, top)
        self.assertIn(swap, upset(self.E, (0,), (1,)))
        for points_a, points_b in [((0,), (1,)), ((1,), (1,)), ((0, 1), (1, 0))]:
            self.assertNotIn(ZERO, upset(self.E, points_a, points_b))

    def test_upset_meets_stratum_in_box(self):
        for points_a, points_b in [((0,), (1,)), ((1,), (1,)), ((0, 1), (1, 0))]:
            k = len(points_a)
            self.assertEqual(
                upset(self.E, points_a, points_b) & stratum(self.E, k),
                box(self.E, [self.S.elements()] * k, points_a, points_b),
                f"{points_a} -> {points_b}",
            )

    def test_transport_round_trip(self):
        src, dst = ((0, 1), (1, 0)), ((1, 0), (0, 1))
        source = box(self.E, [self.S.elements()] * 2, *src)
        moved = {alpha: transport(self.E, alpha, src, dst) for alpha in source}
        self.assertEqual(set(moved.values()), box(self.E, [self.S.elements()] * 2, *dst))
        for alpha, beta in moved.items():
            self.assertEqual(transport(self.E, beta, dst, src), alpha)
        self.assertEqual(transport(self.E, el((0, 0, 1), (1, 1, 0)), src, dst), el((0, 1, 1), (1, 0, 0)))

    def test_box_star_closed(self):
        E = ExtensionSemigroup(2, 1, self.S)
        closed = box_star_closed(E, [(s,) for s in self.S.elements()], 1)
        self.assertEqual(len(closed), 9)
        self.assertEqual(closed, frozenset(E.elements()))
        self.assertEqual(box_star_closed(E, [(0,)], 1), frozenset({ZERO}) | box_star(E, [(0,)], 1))


class TestCaseLabelMaps(unittest.TestCase):
    def test_s_extension_and_restriction(self):
        E = ExtensionSemigroup(2, 1, builtin("min2"))
        pi = PartialInjection(2, ((0, 1),))
        alpha = s_extension(pi, 1, E)
        self.assertEqual(alpha, el((0, 1, 1)))
        self.assertEqual(restriction(E, alpha), pi)
        self.assertEqual(restriction(E, ZERO), PartialInjection(2, ()))
        with self.assertRaises(RankExceeded):
            s_extension(PartialInjection(2, ((0, 1), (1, 0))), 1, E)

    def test_restriction_onto_symmetric_inverse(self):
        E = ExtensionSemigroup(3, 2, builtin("chain3"))
        target = SymmetricInverseSemigroup(3, 2)
        erase = {alpha: restriction(E, alpha) for alpha in E.elements()}
        self.assertTrue(is_morphism(erase, E, target))
        self.assertEqual(set(erase.values()), set(target.elements()))

    def test_trivial_base(self):
        E = ExtensionSemigroup(2, 2, builtin("trivial"))
        self.assertTrue(
            is_morphism(lambda a: restriction(E, a), E, SymmetricInverseSemigroup(2, 2), require_bijective=True)
        )

    def test_brandt(self):
        B, cells = brandt_extension(builtin("min2"), 2)
        self.assertEqual(B.size, 9)
        self.assertEqual(cells[1 + (0 * 2 + 1) * 2 + 1], (0, 1, 1))
        for name in ("trivial", "min2", "Z2", "nonortho5"):
            self.assertTrue(brandt_iso(builtin(name), 2), name)


if __name__ == "__main__":
    unittest.main()
