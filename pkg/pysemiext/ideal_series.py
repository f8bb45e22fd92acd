from typing import Collection, Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple
from itertools import permutations, product
from .abstract import FiniteCarrier
from .semigroup import FiniteSemigroup, direct_power, ideal_witness
from .extension import ZERO, ExtensionSemigroup, box_star_closed, rank_ideal, tuple_image
from .errors import (
    BaseSeriesInvalid,
    EmptySubset,
    InvalidParameters,
    NotAnIdeal,
    NotKSymmetric,
    NotProperSubset,
)

import logging

VARIANTS = ("ranked", "ranked_nonzero", "rank_one", "rank_one_nonzero")


class IdealSeries:
    """An ascending chain of ideals I_0 <= ... <= I_m ending at the whole carrier."""

    def __init__(self, carrier: FiniteCarrier, chain: Iterable[Iterable], labels: Optional[Sequence[str]] = None) -> None:
        self.carrier = carrier
        self.chain: Tuple[FrozenSet, ...] = tuple(frozenset(link) for link in chain)
        if labels is None:
            labels = [f"I_{j}" for j in range(len(self.chain))]
        if len(labels) != len(self.chain):
            raise ValueError(f"{len(labels)} labels for {len(self.chain)} links")
        self.labels: Tuple[str, ...] = tuple(labels)

    def __len__(self) -> int:
        return len(self.chain)

    def __getitem__(self, j: int) -> FrozenSet:
        return self.chain[j]

    def sizes(self) -> List[int]:
        return [len(link) for link in self.chain]

    def distinct_links(self) -> List[FrozenSet]:
        """The chain with repeated consecutive links collapsed."""
        links: List[FrozenSet] = []
        for link in self.chain:
            if not links or links[-1] != link:
                links.append(link)
        return links

    def __repr__(self) -> str:
        return f"IdealSeries(sizes={self.sizes()})"


def series_differences(series: IdealSeries) -> List[FrozenSet]:
    """D_j = I_j minus I_{j-1}, reading I_{-1} as empty."""
    previous: FrozenSet = frozenset()
    differences = []
    for link in series.chain:
        differences.append(link - previous)
        previous = link
    return differences


def _bounded_tuples(B: Iterable, A: Iterable, m: int, p: int) -> FrozenSet[Tuple]:
    inner = set(B)
    return frozenset(
        word for word in product(sorted(A), repeat=m) if sum(x not in inner for x in word) <= p
    )


def coord_bounded(S: FiniteSemigroup, B: Iterable[int], A: Iterable[int], m: int, p: int) -> FrozenSet[Tuple]:
    """Tuples of A^m with at most p coordinates in A minus B."""
    B, A = frozenset(B), frozenset(A)
    if not 0 <= p <= m:
        raise InvalidParameters(f"p must lie in 0..{m}, got {p}")
    for name, subset in (("B", B), ("A", A)):
        try:
            escaping = ideal_witness(S, subset)
        except EmptySubset:
            raise NotAnIdeal(f"{name} is empty")
        if escaping is not None:
            raise NotAnIdeal(f"{name}={sorted(subset)} is not an ideal: {escaping}")
    if not B < A:
        raise NotProperSubset(f"{sorted(B)} is not a proper subset of {sorted(A)}")
    return _bounded_tuples(B, A, m, p)


def is_k_symmetric(T: Iterable[Sequence], k: int) -> bool:
    members = {tuple(word) for word in T}
    if any(len(word) != k for word in members):
        return False
    return all(
        tuple(word[i] for i in sigma) in members
        for word in members
        for sigma in permutations(range(k))
    )


def symmetric_box_check(E: ExtensionSemigroup, A: Iterable[Sequence], points_a: Sequence[int], points_b: Sequence[int]) -> bool:
    """A k-symmetric label set lands on the same elements whichever order the point pairs are listed in."""
    A = [tuple(word) for word in A]
    k = len(points_a)
    if not is_k_symmetric(A, k):
        raise NotKSymmetric(f"label set is not closed under permuting {k} coordinates")
    reference = tuple_image(E, A, points_a, points_b)
    for sigma in permutations(range(k)):
        shuffled_a = [points_a[i] for i in sigma]
        shuffled_b = [points_b[i] for i in sigma]
        if tuple_image(E, A, shuffled_a, shuffled_b) != reference:
            return False
    return True


def omega_unstable(carrier: FiniteCarrier, D: Collection, strong: bool = False) -> bool:
    """
    Omega-unstability asks first of all that D be infinite, with every
    infinite B inside D pushed out of D by some multiplier (by a pair of
    multipliers when strong). A materialized subset is finite, so this is
    always false here.
    """
    logging.debug(f"omega_unstable on a finite set of {len(D)} elements (strong={strong})")
    return False


def is_tight(series: IdealSeries) -> bool:
    """I_0 finite and every later difference omega-unstable."""
    differences = series_differences(series)[1:]
    return all(omega_unstable(series.carrier, d) for d in differences)


def is_strongly_tight(series: IdealSeries) -> bool:
    differences = series_differences(series)[1:]
    return all(omega_unstable(series.carrier, d, strong=True) for d in differences)


def rank_series(E: ExtensionSemigroup) -> IdealSeries:
    chain = [rank_ideal(E, k) for k in range(0, E.n + 1)]
    labels = ["{0}"] + [f"I^{k}" for k in range(1, E.n + 1)]
    return IdealSeries(E, chain, labels)


def _require_valid(carrier: FiniteCarrier, series: IdealSeries) -> None:
    report = verify_series(carrier, series)
    if report["status"] != "SUCCESSFUL":
        raise BaseSeriesInvalid(f"base series is not an ideal series: {report['failures']}")


def power_series_build(S: FiniteSemigroup, base_series: IdealSeries, n: int):
    """
    The chain I_0^n <= [I_0 < I_1]^n_1 <= ... <= [I_0 < I_1]^n_n <= ...
    <= [I_{m-1} < I_m]^n_n = I_m^n in the direct power S^n.
    """
    _require_valid(S, base_series)
    if n == 1:
        return base_series
    power = direct_power(S, n)
    chain = [_bounded_tuples(base_series[0], base_series[0], n, 0)]
    labels = ["I_0^n"]
    for j in range(1, len(base_series)):
        for q in range(1, n + 1):
            chain.append(_bounded_tuples(base_series[j - 1], base_series[j], n, q))
            labels.append(f"[I_{j - 1}<I_{j}]_{q}")
    return IdealSeries(power, chain, labels)


def big_series_build(E: ExtensionSemigroup, base_series: IdealSeries, variant: str) -> IdealSeries:
    """Assembles one of the ideal series of I_lam^n(S) built from a series of S."""
    if variant not in VARIANTS:
        raise InvalidParameters(f"unknown variant {variant!r}, expected one of {VARIANTS}")
    _require_valid(E.base, base_series)
    ideals = base_series.chain
    m = len(ideals) - 1

    def closure(k: int, tuples) -> FrozenSet:
        return box_star_closed(E, tuples, k)

    def singles(ideal) -> List[Tuple]:
        return [(x,) for x in sorted(ideal)]

    chain: List[FrozenSet] = []
    labels: List[str] = []

    if variant in ("rank_one", "rank_one_nonzero"):
        if E.n != 1:
            raise InvalidParameters(f"variant {variant} is built for n=1, got n={E.n}")
        if variant == "rank_one":
            chain.append(frozenset({ZERO}))
            labels.append("{0}")
        # the closures already hold the zero, so rank_one_nonzero starts at J_0
        chain.extend(closure(1, singles(ideals[j])) for j in range(m))
        labels.extend(f"J_{j}" for j in range(m))
        chain.append(frozenset(E.elements()))
        labels.append("I^1")
        return IdealSeries(E, chain, labels)

    if variant == "ranked":
        chain.append(frozenset({ZERO}))
        labels.append("{0}")
        for j in range(m + 1):
            chain.append(closure(1, singles(ideals[j])))
            labels.append(f"J_1,{j}")
    else:
        chain.append(closure(1, singles(ideals[0])))
        labels.append("J_0")
        for j in range(1, m + 1):
            chain.append(closure(1, singles(ideals[j])))
            labels.append(f"J_1,{j}")

    for k in range(2, E.n + 1):
        if variant == "ranked":
            chain.append(closure(k, _bounded_tuples(ideals[0], ideals[0], k, 0)))
            labels.append(f"J_{k},0")
        for j in range(1, m + 1):
            for q in range(1, k + 1):
                chain.append(closure(k, _bounded_tuples(ideals[j - 1], ideals[j], k, q)))
                labels.append(f"J_{k},{j},{q}")
    return IdealSeries(E, chain, labels)


def verify_series(carrier: FiniteCarrier, series: IdealSeries) -> Dict:
    """Per-link ideal verdicts, inclusion of each link in the next, top equal to the carrier."""
    links = []
    failures = []
    for label, link in zip(series.labels, series.chain):
        if not link:
            links.append({"label": label, "size": 0, "is_ideal": False, "witness": "empty"})
            failures.append(f"{label} is empty")
            continue
        escaping = ideal_witness(carrier, link)
        links.append({
            "label": label,
            "size": len(link),
            "is_ideal": escaping is None,
            "witness": None if escaping is None else {k: str(v) for k, v in escaping.items()},
        })
        if escaping is not None:
            failures.append(f"{label} is not an ideal: {escaping['element']} * {escaping['multiplier']} escapes")

    ascending = True
    for j in range(1, len(series.chain)):
        if not series.chain[j - 1] <= series.chain[j]:
            ascending = False
            failures.append(f"{series.labels[j - 1]} is not contained in {series.labels[j]}")
            break

    top = bool(series.chain) and series.chain[-1] == frozenset(carrier.elements())
    if not top:
        failures.append("last link is not the whole carrier")
    report = {
        "status": "SUCCESSFUL" if not failures else "FAILED",
        "links": links,
        "ascending": ascending,
        "top_is_carrier": top,
        "bottom_finite": True,
        "tight": is_tight(series),
        "strongly_tight": is_strongly_tight(series),
        "failures": failures,
    }
    logging.info(f"Series of {len(series)} links on {carrier!r}: {report['status']}")
    return report
