"""
Verification batteries behind `pysemiext verify`. Each suite returns a report
dict with a SUCCESSFUL/FAILED status and one entry per named check; nothing
here raises on a failed property.
"""
from typing import Dict, List, Optional, Sequence, Tuple
from itertools import combinations, product
from ..semigroup import (
    direct_power,
    is_ideal,
    is_morphism,
    is_subsemigroup,
    RELATIONS,
    regularity,
    stability,
)
from ..partial import SymmetricInverseSemigroup, count_In, enumerate_In, matrix_units, matrix_units_iso
from ..extension import (
    ExtElement,
    ExtensionSemigroup,
    box,
    brandt_iso,
    check_associativity,
    congruence_witness,
    embed_power_map,
    equiv0,
    equiv0_literal,
    equivalence_witness,
    is_idempotent_brute,
    is_idempotent_fast,
    is_regular_brute,
    is_regular_fast,
    j0_ideal,
    quotient,
    rank_ideal,
    restriction,
)
from ..green_ext import cross_check_green, mismatches
from ..bicyclic import bc_green, bc_mul, bounded_witness_search, elements_up_to, verify_h_example
from ..ideal_series import (
    IdealSeries,
    big_series_build,
    coord_bounded,
    is_k_symmetric,
    symmetric_box_check,
    power_series_build,
    rank_series,
    verify_series,
)
from ..zoo import MONOID_ZOO, ZOO, builtin, resolve

import logging
import math

FLAGS = ("is_regular", "is_orthodox", "is_inverse")
GRID = [(lam, n) for lam in (1, 2, 3) for n in (1, 2) if n <= lam]


class SuiteReport:
    def __init__(self, suite: str) -> None:
        self.suite = suite
        self.checks: List[Dict] = []
        self.note: Optional[str] = None

    def check(self, name: str, passed: bool, detail=None) -> bool:
        self.checks.append({"name": name, "passed": bool(passed), "detail": detail})
        if not passed:
            logging.debug(f"{self.suite}: check failed: {name} ({detail})")
        return passed

    def to_dict(self) -> Dict:
        failures = [c for c in self.checks if not c["passed"]]
        report = {
            "suite": self.suite,
            "status": "FAILED" if failures else "SUCCESSFUL",
            "checks": self.checks,
            "first_failure": failures[0] if failures else None,
        }
        if self.note:
            report["note"] = self.note
        return report


def _bases(cfg, default: Sequence[str]) -> List[Tuple[str, object]]:
    if getattr(cfg, "inputs", ()):
        return [(source, resolve(source, cfg.size_guard)) for source in cfg.inputs]
    return [(name, builtin(name)) for name in default]


def _shapes(cfg, default: Sequence[Tuple[int, int]]) -> List[Tuple[int, int]]:
    if getattr(cfg, "lam", None) is not None and getattr(cfg, "n", None) is not None:
        return [(cfg.lam, cfg.n)]
    return list(default)


def structure_suite(cfg) -> Dict:
    report = SuiteReport("structure")

    # element counts against the closed form
    sizes = {1: builtin("trivial"), 2: builtin("min2"), 3: builtin("chain3")}
    wrong = []
    for (lam, n), (size, S) in product(GRID, sizes.items()):
        E = ExtensionSemigroup(lam, n, S)
        if len(E.elements()) != E.count():
            wrong.append((lam, n, size))
    report.check("enumeration counts match the closed form", not wrong, wrong or None)
    expected = {(2, 1, 2): 9, (2, 2, 2): 17, (3, 2, 2): 91, (3, 2, 3): 190}
    report.check(
        "documented counts 9, 17, 91, 190",
        all(ExtensionSemigroup(lam, n, sizes[s]).count() == c for (lam, n, s), c in expected.items()),
    )
    report.check("unlabeled count of I_3^2 is 28", count_In(3, 2) == 28 == len(list(enumerate_In(3, 2))))

    # fast predicates against brute force, every element
    for name in ZOO:
        S = builtin(name)
        disagreements = 0
        for lam, n in GRID:
            E = ExtensionSemigroup(lam, n, S)
            for alpha in E.elements():
                disagreements += is_idempotent_fast(E, alpha) != is_idempotent_brute(E, alpha)
                disagreements += is_regular_fast(E, alpha) != is_regular_brute(E, alpha)
        report.check(f"fast idempotent/regular predicates on {name}", disagreements == 0, disagreements or None)

    # flag transfer to the extension and to its quotient
    for name in ZOO:
        S = builtin(name)
        base_flags = regularity(S)
        base_stable = stability(S)["stable"]
        for n in (1, 2):
            E = ExtensionSemigroup(2, n, S)
            table = E.materialize().semigroup
            ext_flags = regularity(table)
            report.check(
                f"regular/orthodox/inverse transfer {name} lambda=2 n={n}",
                all(ext_flags[k] == base_flags[k] for k in FLAGS),
                {k: (base_flags[k], ext_flags[k]) for k in FLAGS},
            )
            report.check(f"stability transfer {name} lambda=2 n={n}", stability(table)["stable"] == base_stable)
            if S.zero is not None:
                q_flags = regularity(quotient(E).semigroup)
                report.check(
                    f"flag transfer to the quotient {name} lambda=2 n={n}",
                    all(q_flags[k] == base_flags[k] for k in FLAGS),
                    {k: (base_flags[k], q_flags[k]) for k in FLAGS},
                )

    report.check(
        "zoo fails each flag somewhere",
        all(any(not regularity(builtin(name))[k] for name in ZOO) for k in FLAGS),
    )

    # isomorphisms
    for lam in (1, 2, 3):
        report.check(f"B_{lam} is isomorphic to I_{lam}^1", matrix_units_iso(lam))
    for name in ZOO:
        report.check(f"B_2({name}) is isomorphic to I_2^1({name})", brandt_iso(builtin(name), 2))
    B2, units = matrix_units(2)
    E = ExtensionSemigroup(2, 1, builtin("trivial"))
    to_element = {i: ExtElement.of([] if u is None else [(u[0], 0, u[1])]) for i, u in enumerate(units)}
    report.check("I_2^1(trivial) is isomorphic to B_2", is_morphism(to_element, B2, E, require_bijective=True))
    E = ExtensionSemigroup(2, 2, builtin("trivial"))
    report.check(
        "I_2^2(trivial) is isomorphic to I_2^2",
        is_morphism(lambda a: restriction(E, a), E, SymmetricInverseSemigroup(2, 2), require_bijective=True),
    )
    S = builtin("min2")
    E = ExtensionSemigroup(2, 2, S)
    embedding = embed_power_map(E, (0, 1))
    image = set(embedding.values())
    report.check(
        "S^2 embeds onto the diagonal box",
        is_morphism(embedding, direct_power(S, 2), E)
        and len(image) == len(embedding)
        and image == box(E, [S.elements()] * 2, (0, 1), (0, 1))
        and is_subsemigroup(E, image),
    )

    # engine sanity
    for name in ZOO:
        S = builtin(name)
        report.check(f"{name} is stable", stability(S)["stable"])
    broken = []
    for (lam, n), S in product(GRID, sizes.values()):
        E = ExtensionSemigroup(lam, n, S)
        target = SymmetricInverseSemigroup(lam, n)
        erase = {a: restriction(E, a) for a in E.elements()}
        if not is_morphism(erase, E, target) or set(erase.values()) != set(target.elements()):
            broken.append((lam, n, S.size))
        if check_associativity(E, seed=cfg.seed)["witness"] is not None:
            broken.append(("associativity", lam, n, S.size))
    report.check("label erasure is a morphism onto I_lam^n and products associate", not broken, broken or None)
    return report.to_dict()


def congruence_suite(cfg) -> Dict:
    report = SuiteReport("congruence")
    E = ExtensionSemigroup(2, 1, builtin("min2"))
    witness = congruence_witness(E, equiv0_literal)
    documented = (ExtElement.of([(0, 1, 0)]), ExtElement.of([(0, 1, 1)]))
    found = witness is not None and {witness[0], witness[1]} == set(documented)
    if getattr(cfg, "literal_reading", False):
        report.check(
            "coordinatewise reading separates a related pair",
            found,
            None if witness is None else [str(x) for x in witness],
        )
        report.note = "counterexample recorded" if found else None
        return report.to_dict()

    report.check("coordinatewise reading is not a congruence", found)
    for name, n in product(("min2", "chain3"), (1, 2)):
        E = ExtensionSemigroup(2, n, builtin(name))
        report.check(f"equiv0 is an equivalence on {name} n={n}", equivalence_witness(E, equiv0) is None)
        report.check(f"equiv0 is a congruence on {name} n={n}", congruence_witness(E, equiv0) is None)
        J0 = j0_ideal(E)
        report.check(f"J0 is an ideal on {name} n={n}", is_ideal(E, J0))
        for k in range(1, n):
            report.check(f"I^{k} is an ideal on {name} n={n}", is_ideal(E, rank_ideal(E, k)))
        # one class per nonzero-labeled partial bijection, plus the class of J0
        nonzero = len(E.base_elements()) - 1
        expected = 1 + sum(math.comb(2, k) ** 2 * math.factorial(k) * nonzero**k for k in range(1, n + 1))
        classes = len(quotient(E).classes)
        report.check(f"quotient of {name} n={n} has {expected} classes", classes == expected, classes)
    return report.to_dict()


def green_suite(cfg) -> Dict:
    report = SuiteReport("green")
    for (name, S), (lam, n) in product(_bases(cfg, MONOID_ZOO), _shapes(cfg, [(2, 1), (2, 2)])):
        E = ExtensionSemigroup(lam, n, S, cfg.size_guard)
        reports = cross_check_green(E)
        bad = mismatches(reports)
        report.check(
            f"characterizations match the table on {name} lambda={lam} n={n}",
            not bad,
            f"{len(bad)} mismatches of {len(reports)}" if bad else f"{len(reports)} verdicts",
        )
        verdicts = {(r.relation, r.alpha, r.beta): r.char_result for r in reports}
        refines = all(
            not verdicts[("H", a, b)] or (verdicts[("R", a, b)] and verdicts[("D", a, b)])
            for a, b in product(E.elements(), repeat=2)
        ) and all(
            not verdicts[("D", a, b)] or verdicts[("J", a, b)] for a, b in product(E.elements(), repeat=2)
        )
        report.check(f"H refines R and D refines J on {name} lambda={lam} n={n}", refines)
    return report.to_dict()


def bicyclic_suite(cfg) -> Dict:
    report = SuiteReport("bicyclic")
    lam = cfg.lam if getattr(cfg, "lam", None) is not None else 2
    n = cfg.n if getattr(cfg, "n", None) is not None else 2
    example = verify_h_example(lam, n)
    report.check("H-related elements with no labelwise H pairing", example["status"] == "SUCCESSFUL", example["checks"])

    grid = list(elements_up_to(6))
    associative = all(bc_mul(bc_mul(a, b), c) == bc_mul(a, bc_mul(b, c)) for a, b, c in product(grid, repeat=3))
    report.check("bicyclic product is associative up to exponent 6", associative)

    small = list(elements_up_to(min(4, cfg.bound)))
    disagreements = []
    for u, v in product(small, repeat=2):
        for relation in RELATIONS:
            closed = bc_green(u, v, relation, cfg.bound)[0]
            searched = bounded_witness_search(u, v, relation, cfg.bound) is not None
            if closed != searched:
                disagreements.append((str(u), str(v), relation))
    report.check(
        f"bounded search (bound {cfg.bound}) agrees with the closed forms",
        not disagreements,
        disagreements[:5] or None,
    )
    return report.to_dict()


def _ideals(S) -> List[frozenset]:
    elements = S.elements()
    return [
        frozenset(subset)
        for size in range(1, len(elements) + 1)
        for subset in combinations(elements, size)
        if is_ideal(S, subset)
    ]


def series_suite(cfg) -> Dict:
    report = SuiteReport("series")

    failures = []
    for name in ZOO:
        S = builtin(name)
        ideals = _ideals(S)
        for B, A in product(ideals, repeat=2):
            if not B < A:
                continue
            for m in (1, 2, 3):
                power = direct_power(S, m)
                for p in range(m + 1):
                    bounded = coord_bounded(S, B, A, m, p)
                    if not is_ideal(power, bounded) or not is_k_symmetric(bounded, m):
                        failures.append((name, sorted(B), sorted(A), m, p))
    report.check("coordinate-bounded sets are symmetric ideals of the power", not failures, failures[:5] or None)

    null2 = builtin("null2")
    report.check(
        "null2 [{0} < S]^2_1 has 3 tuples",
        coord_bounded(null2, {0}, {0, 1}, 2, 1) == {(0, 0), (0, 1), (1, 0)},
    )

    for lam, n, name, sizes in ((2, 2, "trivial", [1, 5, 7]), (3, 2, "min2", [1, 19, 91])):
        E = ExtensionSemigroup(lam, n, builtin(name))
        series = rank_series(E)
        report.check(
            f"rank series of {name} lambda={lam} n={n}",
            series.sizes() == sizes and verify_series(E, series)["status"] == "SUCCESSFUL",
            series.sizes(),
        )

    base = IdealSeries(null2, [{0}, {0, 1}])
    powered = power_series_build(null2, base, 2)
    report.check(
        "power series of null2 squared",
        powered.sizes() == [1, 3, 4] and verify_series(powered.carrier, powered)["status"] == "SUCCESSFUL",
        powered.sizes(),
    )

    chain3 = builtin("chain3")
    base = IdealSeries(chain3, [{0}, {0, 1}, {0, 1, 2}])
    E = ExtensionSemigroup(2, 2, chain3)
    for variant in ("ranked", "ranked_nonzero"):
        series = big_series_build(E, base, variant)
        result = verify_series(E, series)
        report.check(f"{variant} series on chain3 lambda=2 n=2", result["status"] == "SUCCESSFUL", result["failures"] or None)

    min2 = builtin("min2")
    base = IdealSeries(min2, [{0}, {0, 1}])
    E = ExtensionSemigroup(2, 1, min2)
    for variant, sizes in (("rank_one", [1, 5, 9]), ("rank_one_nonzero", [5, 9])):
        series = big_series_build(E, base, variant)
        result = verify_series(E, series)
        report.check(
            f"{variant} series on min2 lambda=2 n=1",
            series.sizes() == sizes and result["status"] == "SUCCESSFUL",
            series.sizes(),
        )

    E = ExtensionSemigroup(2, 2, min2)
    collapsed = big_series_build(E, IdealSeries(min2, [{0, 1}, {0, 1}]), "ranked")
    report.check(
        "single-ideal base series collapses onto the rank series",
        collapsed.distinct_links() == list(rank_series(E).chain),
    )
    report.check(
        "label order along the points does not matter for symmetric sets",
        symmetric_box_check(E, list(product(min2.elements(), repeat=2)), (0, 1), (1, 0)),
    )
    return report.to_dict()


SUITES = {
    "structure": structure_suite,
    "congruence": congruence_suite,
    "green": green_suite,
    "bicyclic": bicyclic_suite,
    "series": series_suite,
}


def run_suite(name: str, cfg) -> Dict:
    if name == "all":
        combined = SuiteReport("all")
        for suite_name, suite in SUITES.items():
            logging.info(f"Running suite {suite_name}")
            result = suite(cfg)
            for check in result["checks"]:
                combined.check(f"{suite_name}: {check['name']}", check["passed"], check["detail"])
        return combined.to_dict()
    logging.info(f"Running suite {name}")
    result = SUITES[name](cfg)
    logging.info(f"Suite {name}: {result['status']}")
    return result
