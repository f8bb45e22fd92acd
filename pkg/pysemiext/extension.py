from typing import Any, Dict, FrozenSet, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple
from dataclasses import dataclass
from itertools import combinations, permutations, product
from .abstract import FiniteCarrier, Semigroup
from .semigroup import FiniteSemigroup, GreenStructure, green, is_morphism, regularity, validate
from .partial import PartialInjection
from .errors import (
    ArityMismatch,
    BaseHasNoZero,
    BaseNotMonoid,
    CarrierMismatch,
    DuplicatePoints,
    ForeignElement,
    InfiniteCarrier,
    InvalidParameters,
    NonAssociative,
    NotACongruence,
    NotAnInversePair,
    RankExceeded,
    SizeGuardExceeded,
)
from . import config

import numpy as np
import logging
import random
import math

Triple = Tuple[int, Any, int]


@dataclass(frozen=True)
class ExtElement:
    """
    An element of I_lam^n(S): either the zero (triples is None) or a labeled
    partial bijection, triples (x, s, y) sorted by x, meaning x is sent to y
    carrying the base label s.
    """

    triples: Optional[Tuple[Triple, ...]]

    def __post_init__(self) -> None:
        if self.triples is None:
            return
        if not self.triples:
            raise ValueError("a non-zero element needs at least one triple, use ExtElement.of")
        xs = [x for x, _, _ in self.triples]
        ys = [y for _, _, y in self.triples]
        if xs != sorted(set(xs)) or len(set(ys)) != len(ys):
            raise DuplicatePoints(f"{self.triples} is not a sorted partial bijection")

    @classmethod
    def of(cls, triples: Iterable[Triple]) -> "ExtElement":
        ordered = tuple(sorted(triples, key=lambda t: t[0]))
        return cls(ordered) if ordered else ZERO

    @property
    def is_zero(self) -> bool:
        return self.triples is None

    @property
    def rank(self) -> int:
        return 0 if self.triples is None else len(self.triples)

    @property
    def domain(self) -> Tuple[int, ...]:
        return () if self.triples is None else tuple(x for x, _, _ in self.triples)

    @property
    def image(self) -> Tuple[int, ...]:
        return () if self.triples is None else tuple(y for _, _, y in self.triples)

    @property
    def labels(self) -> Tuple:
        return () if self.triples is None else tuple(s for _, s, _ in self.triples)

    def render(self) -> str:
        """Three rows: domain points, labels, image points."""
        if self.triples is None:
            return "0"
        columns = [(str(x), str(s), str(y)) for x, s, y in self.triples]
        widths = [max(len(c) for c in column) for column in columns]
        rows = [" ".join(c[i].rjust(w) for c, w in zip(columns, widths)) for i in range(3)]
        return "\n".join(f"[ {row} ]" for row in rows)

    def to_json(self, names: Optional[Sequence[str]] = None) -> Dict:
        if self.triples is None:
            return {"zero": True}
        label = (lambda s: names[s]) if names else (lambda s: s if isinstance(s, int) else str(s))
        return {"triples": [[x, label(s), y] for x, s, y in self.triples]}

    def __str__(self) -> str:
        if self.triples is None:
            return "0"
        return "[" + ",".join(f"({x},{s},{y})" for x, s, y in self.triples) + "]"


ZERO = ExtElement(None)


class Materialization:
    """The Cayley table of a finite extension with its element/index bijection."""

    def __init__(self, semigroup: FiniteSemigroup, elements: List[ExtElement]) -> None:
        self.semigroup = semigroup
        self.elements = elements
        self.index: Dict[ExtElement, int] = {a: i for i, a in enumerate(elements)}

    def index_of(self, alpha: ExtElement) -> int:
        return self.index[alpha]

    def element_at(self, i: int) -> ExtElement:
        return self.elements[i]

    def indices(self, subset: Iterable[ExtElement]) -> List[int]:
        return sorted(self.index[a] for a in subset)


class ExtensionSemigroup(FiniteCarrier):
    """I_lam^n(S) over a base semigroup. Finite carrier operations need a finite base."""

    def __init__(self, lam: int, n: int, base: Semigroup, guard: Optional[int] = None) -> None:
        if lam < 1 or not 1 <= n <= lam:
            raise InvalidParameters(f"need 1 <= n <= lambda, got lambda={lam}, n={n}")
        self.lam = lam
        self.n = n
        self.base = base
        self.guard = config.size_guard(guard)
        self._elements: Optional[List[ExtElement]] = None
        self._materialization: Optional[Materialization] = None
        self._base_regular: Optional[FrozenSet] = None
        self._base_green: Optional[GreenStructure] = None
        self._green: Optional[GreenStructure] = None

    @property
    def is_finite(self) -> bool:
        return isinstance(self.base, FiniteCarrier)

    def base_elements(self) -> List:
        if not self.is_finite:
            raise InfiniteCarrier(f"base {self.base!r} is infinite")
        return self.base.elements()

    def count(self) -> int:
        size = len(self.base_elements())
        return 1 + sum(
            math.comb(self.lam, k) ** 2 * math.factorial(k) * size**k
            for k in range(1, self.n + 1)
        )

    @property
    def identity(self) -> Optional[ExtElement]:
        if self.n < self.lam or self.base.identity is None:
            return None
        return ExtElement.of((p, self.base.identity, p) for p in range(self.lam))

    @property
    def zero(self) -> ExtElement:
        return ZERO

    def check(self, alpha: ExtElement) -> None:
        if not isinstance(alpha, ExtElement):
            raise ForeignElement(f"{alpha!r} is not an extension element")
        if alpha.is_zero:
            return
        if alpha.rank > self.n:
            raise ForeignElement(f"{alpha} has rank {alpha.rank} > n={self.n}")
        for x, s, y in alpha.triples:
            if not (0 <= x < self.lam and 0 <= y < self.lam):
                raise ForeignElement(f"{alpha} uses a point outside 0..{self.lam - 1}")
            if not self.base.contains(s):
                raise ForeignElement(f"{alpha} carries label {s!r} outside the base")

    def contains(self, alpha) -> bool:
        try:
            self.check(alpha)
        except ForeignElement:
            return False
        return True

    def multiply(self, alpha: ExtElement, beta: ExtElement) -> ExtElement:
        return ext_product(self, alpha, beta, check=False)

    def elements(self) -> List[ExtElement]:
        if self._elements is None:
            self._elements = list(ext_enumerate(self))
        return self._elements

    def materialize(self) -> Materialization:
        if self._materialization is None:
            self._materialization = materialize(self)
        return self._materialization

    def as_table(self):
        m = self.materialize()
        return m.semigroup, m.index_of

    def base_green(self) -> GreenStructure:
        if self._base_green is None:
            if not isinstance(self.base, FiniteSemigroup):
                raise InfiniteCarrier("Green classes are only tabulated for finite bases")
            self._base_green = green(self.base)
        return self._base_green

    def green(self) -> GreenStructure:
        """Green's relations of the materialized table, indexed like materialize()."""
        if self._green is None:
            self._green = green(self.materialize().semigroup)
        return self._green

    def base_regular_elements(self) -> FrozenSet:
        if self._base_regular is None:
            if not isinstance(self.base, FiniteSemigroup):
                raise InfiniteCarrier("regular labels are only tabulated for finite bases")
            self._base_regular = regularity(self.base)["regular_elements"]
        return self._base_regular

    def __repr__(self) -> str:
        return f"ExtensionSemigroup(lam={self.lam}, n={self.n}, base={self.base!r})"


def ext_product(E: ExtensionSemigroup, alpha: ExtElement, beta: ExtElement, check: bool = True) -> ExtElement:
    if check:
        E.check(alpha)
        E.check(beta)
    if alpha.is_zero or beta.is_zero:
        return ZERO
    lookup = {x: (t, d) for x, t, d in beta.triples}
    chains = []
    for a, s, b in alpha.triples:
        hit = lookup.get(b)
        if hit is not None:
            chains.append((a, E.base.multiply(s, hit[0]), hit[1]))
    return ExtElement(tuple(chains)) if chains else ZERO


def ext_enumerate(E: ExtensionSemigroup) -> Iterator[ExtElement]:
    """Zero first, then by rank, domain points, image points and labels."""
    total = E.count()
    if total > E.guard:
        logging.error(f"Refusing to enumerate {total} elements (guard {E.guard})")
        raise SizeGuardExceeded(total, E.guard)
    labels = E.base_elements()
    yield ZERO
    for k in range(1, E.n + 1):
        for domain in combinations(range(E.lam), k):
            for image in permutations(range(E.lam), k):
                for word in product(labels, repeat=k):
                    yield ExtElement(tuple(zip(domain, word, image)))


def materialize(E: ExtensionSemigroup) -> Materialization:
    elements = E.elements()
    index = {a: i for i, a in enumerate(elements)}
    table = np.empty((len(elements), len(elements)), dtype=np.int64)
    for i, a in enumerate(elements):
        table[i] = [index[ext_product(E, a, b, check=False)] for b in elements]
    names = [str(a) for a in elements]
    semigroup = validate(table, names=names, guard=E.guard)
    logging.info(f"Materialized {E!r}: {len(elements)} elements")
    return Materialization(semigroup, elements)


def random_element(E: ExtensionSemigroup, rng: random.Random) -> ExtElement:
    labels = E.base_elements()
    weights = [1] + [
        math.comb(E.lam, k) ** 2 * math.factorial(k) * len(labels) ** k
        for k in range(1, E.n + 1)
    ]
    k = rng.choices(range(E.n + 1), weights=weights)[0]
    if k == 0:
        return ZERO
    domain = rng.sample(range(E.lam), k)
    image = rng.sample(range(E.lam), k)
    return ExtElement.of(zip(domain, (rng.choice(labels) for _ in range(k)), image))


def check_associativity(
    E: ExtensionSemigroup,
    seed: int = config.DEFAULT_SEED,
    limit: int = config.EXHAUSTIVE_ASSOCIATIVITY_LIMIT,
    samples: int = config.RANDOM_TRIPLES,
) -> Dict:
    """Exhaustive on small extensions, seeded random triples above limit."""
    if E.count() <= limit:
        try:
            materialize(E)
        except NonAssociative as e:
            return {"mode": "exhaustive", "checked": E.count() ** 3, "witness": e.triple}
        return {"mode": "exhaustive", "checked": E.count() ** 3, "witness": None}
    rng = random.Random(seed)
    for _ in range(samples):
        a, b, c = (random_element(E, rng) for _ in range(3))
        if E.multiply(E.multiply(a, b), c) != E.multiply(a, E.multiply(b, c)):
            return {"mode": "random", "checked": samples, "witness": (a, b, c)}
    return {"mode": "random", "checked": samples, "witness": None}


def is_idempotent_fast(E: ExtensionSemigroup, alpha: ExtElement) -> bool:
    if alpha.is_zero:
        return True
    return all(x == y and E.base.multiply(s, s) == s for x, s, y in alpha.triples)


def is_idempotent_brute(E: ExtensionSemigroup, alpha: ExtElement) -> bool:
    return E.multiply(alpha, alpha) == alpha


def is_regular_fast(E: ExtensionSemigroup, alpha: ExtElement) -> bool:
    if alpha.is_zero:
        return True
    regular = E.base_regular_elements()
    return all(s in regular for s in alpha.labels)


def is_regular_brute(E: ExtensionSemigroup, alpha: ExtElement) -> bool:
    m = E.materialize()
    t = m.semigroup.table
    a = m.index_of(alpha)
    return bool(np.any(t[t[a], a] == a))


def inverse_partner(E: ExtensionSemigroup, alpha: ExtElement, label_inverses: Mapping) -> ExtElement:
    """The transpose of alpha relabeled by the supplied label inverses."""
    if alpha.is_zero:
        return ZERO
    mul = E.base.multiply
    triples = []
    for x, s, y in alpha.triples:
        t = label_inverses[s]
        if mul(mul(s, t), s) != s or mul(mul(t, s), t) != t:
            raise NotAnInversePair(s, t)
        triples.append((y, t, x))
    beta = ExtElement.of(triples)
    assert E.multiply(E.multiply(alpha, beta), alpha) == alpha, f"{alpha} {beta} {alpha} != {alpha}"
    assert E.multiply(E.multiply(beta, alpha), beta) == beta, f"{beta} {alpha} {beta} != {beta}"
    return beta


def _base_zero(E: ExtensionSemigroup):
    z = E.base.zero
    if z is None:
        raise BaseHasNoZero(f"base {E.base!r} has no zero")
    return z


def j0_ideal(E: ExtensionSemigroup) -> FrozenSet[ExtElement]:
    z = _base_zero(E)
    members = {ZERO}
    for k in range(1, E.n + 1):
        for domain in combinations(range(E.lam), k):
            for image in permutations(range(E.lam), k):
                members.add(ExtElement(tuple(zip(domain, (z,) * k, image))))
    return frozenset(members)


def nonzero_support(E: ExtensionSemigroup, alpha: ExtElement) -> FrozenSet[Triple]:
    z = _base_zero(E)
    if alpha.is_zero:
        return frozenset()
    return frozenset(t for t in alpha.triples if t[1] != z)


def equiv0(E: ExtensionSemigroup, alpha: ExtElement, beta: ExtElement) -> bool:
    """Equal nonzero supports; J_0 is exactly the class of the empty support."""
    return nonzero_support(E, alpha) == nonzero_support(E, beta)


def equiv0_literal(E: ExtensionSemigroup, alpha: ExtElement, beta: ExtElement) -> bool:
    """
    Coordinatewise reading: equal, or both in J_0, or both outside J_0 with
    equal labels at every (x, y) carried by both with nonzero labels. This is
    not a congruence; see congruence_witness.
    """
    if alpha == beta:
        return True
    a_support, b_support = nonzero_support(E, alpha), nonzero_support(E, beta)
    if not a_support and not b_support:
        return True
    if not a_support or not b_support:
        return False
    a_labels = {(x, y): s for x, s, y in a_support}
    b_labels = {(x, y): s for x, s, y in b_support}
    return all(a_labels[key] == b_labels[key] for key in a_labels.keys() & b_labels.keys())


def congruence_witness(E: ExtensionSemigroup, relation) -> Optional[Tuple]:
    """
    First (alpha, beta, gamma, side) with alpha ~ beta but the products with
    gamma on that side unrelated, or None when relation is compatible with
    multiplication on both sides.
    """
    m = E.materialize()
    elements = m.elements
    t = m.semigroup.table
    related = np.array([[relation(E, a, b) for b in elements] for a in elements], dtype=bool)
    for i, j in np.argwhere(related):
        right = ~related[t[i], t[j]]
        left = ~related[t[:, i], t[:, j]]
        for side, bad in (("right", right), ("left", left)):
            hits = np.flatnonzero(bad)
            if hits.size:
                return elements[i], elements[j], elements[int(hits[0])], side
    return None


def equivalence_witness(E: ExtensionSemigroup, relation) -> Optional[Tuple]:
    """A failing (alpha,), (alpha, beta) or (alpha, beta, gamma) for reflexivity, symmetry or transitivity."""
    elements = E.elements()
    related = np.array([[relation(E, a, b) for b in elements] for a in elements], dtype=bool)
    for i in range(len(elements)):
        if not related[i, i]:
            return (elements[i],)
    asymmetric = np.argwhere(related != related.T)
    if asymmetric.size:
        i, j = asymmetric[0]
        return elements[i], elements[j]
    reach = related.astype(np.int64)
    broken = np.argwhere(((reach @ reach) > 0) & ~related)
    if broken.size:
        i, k = broken[0]
        j = int(np.flatnonzero(related[i] & related[:, k])[0])
        return elements[i], elements[j], elements[k]
    return None


class Quotient:
    def __init__(self, semigroup: FiniteSemigroup, classes: List[FrozenSet[ExtElement]]) -> None:
        self.semigroup = semigroup
        self.classes = classes
        self.class_map: Dict[ExtElement, int] = {a: i for i, part in enumerate(classes) for a in part}

    def class_of(self, alpha: ExtElement) -> int:
        return self.class_map[alpha]


def quotient(E: ExtensionSemigroup) -> Quotient:
    """
    The semigroup of equiv0 classes. Classes are numbered by first appearance
    in enumeration order, so the class of the zero is 0.
    """
    m = E.materialize()
    keys: Dict[FrozenSet, int] = {}
    members: List[List[ExtElement]] = []
    labels = np.empty(len(m.elements), dtype=np.int64)
    for i, alpha in enumerate(m.elements):
        key = nonzero_support(E, alpha)
        if key not in keys:
            keys[key] = len(members)
            members.append([])
        labels[i] = keys[key]
        members[keys[key]].append(alpha)

    t = m.semigroup.table
    representatives = [m.index_of(part[0]) for part in members]
    table = labels[t[np.ix_(representatives, representatives)]]
    induced = table[labels[:, None], labels[None, :]]
    bad = np.argwhere(labels[t] != induced)
    if bad.size:
        i, j = (int(v) for v in bad[0])
        rep = m.elements[representatives[labels[i]]]
        raise NotACongruence(m.elements[i], rep, m.elements[j], "right")
    names = [str(min(part, key=lambda a: m.index_of(a))) for part in members]
    semigroup = validate(table, names=names, guard=E.guard)
    logging.info(f"Quotient of {E!r}: {len(members)} classes")
    return Quotient(semigroup, [frozenset(part) for part in members])


def _distinct(points: Sequence[int], name: str) -> None:
    if len(set(points)) != len(points):
        raise DuplicatePoints(f"{name} {tuple(points)} repeats a point")


def _check_points(E: ExtensionSemigroup, points_a: Sequence[int], points_b: Sequence[int]) -> None:
    if len(points_a) != len(points_b):
        raise ArityMismatch(f"{len(points_a)} domain points against {len(points_b)} image points")
    _distinct(points_a, "points_a")
    _distinct(points_b, "points_b")
    if len(points_a) > E.n:
        raise RankExceeded(f"{len(points_a)} points exceed n={E.n}")
    if any(not 0 <= p < E.lam for p in list(points_a) + list(points_b)):
        raise ForeignElement(f"points must lie in 0..{E.lam - 1}")


def embed_power(E: ExtensionSemigroup, labels: Sequence, points: Sequence[int]) -> ExtElement:
    if len(labels) != len(points):
        raise ArityMismatch(f"{len(labels)} labels for {len(points)} points")
    _check_points(E, points, points)
    return ExtElement.of(zip(points, labels, points))


def embed_power_map(E: ExtensionSemigroup, points: Sequence[int]) -> Dict[Tuple, ExtElement]:
    """The embedding of S^i as a dict on tuples, ready for is_morphism."""
    words = product(E.base_elements(), repeat=len(points))
    return {word: embed_power(E, word, points) for word in words}


def tuple_image(
    E: ExtensionSemigroup, tuples: Iterable[Sequence], points_a: Sequence[int], points_b: Sequence[int]
) -> FrozenSet[ExtElement]:
    """Labels from each k-tuple placed along the pairing points_a[j] -> points_b[j]."""
    _check_points(E, points_a, points_b)
    k = len(points_a)
    members = set()
    for word in tuples:
        if len(word) != k:
            raise ArityMismatch(f"tuple {tuple(word)} has arity {len(word)}, expected {k}")
        members.add(ExtElement.of(zip(points_a, word, points_b)))
    return frozenset(members)


def box(
    E: ExtensionSemigroup, A_list: Sequence[Iterable], points_a: Sequence[int], points_b: Sequence[int]
) -> FrozenSet[ExtElement]:
    if len(A_list) != len(points_a):
        raise ArityMismatch(f"{len(A_list)} label sets for {len(points_a)} points")
    _check_points(E, points_a, points_b)
    return tuple_image(E, product(*(sorted(A) for A in A_list)), points_a, points_b)


def box_star(E: ExtensionSemigroup, tuples: Iterable[Sequence], k: int) -> FrozenSet[ExtElement]:
    """Union of tuple_image over all ordered k-collections of distinct points."""
    if k > E.n:
        raise RankExceeded(f"k={k} exceeds n={E.n}")
    tuples = list(tuples)
    members = set()
    for points_a in permutations(range(E.lam), k):
        for points_b in permutations(range(E.lam), k):
            members |= tuple_image(E, tuples, points_a, points_b)
    return frozenset(members)


def box_star_closed(E: ExtensionSemigroup, tuples: Iterable[Sequence], k: int) -> FrozenSet[ExtElement]:
    return box_star(E, tuples, k) | rank_ideal(E, k - 1)


def stratum(E: ExtensionSemigroup, k: int) -> FrozenSet[ExtElement]:
    return frozenset(a for a in E.elements() if a.rank == k)


def rank_ideal(E: ExtensionSemigroup, k: int) -> FrozenSet[ExtElement]:
    """I_lam^k(S) inside E, the zero included."""
    if k > E.n:
        raise RankExceeded(f"k={k} exceeds n={E.n}")
    return frozenset(a for a in E.elements() if a.rank <= k)


def identity_labeled(E: ExtensionSemigroup, points_from: Sequence[int], points_to: Sequence[int] = None) -> ExtElement:
    """points_from[j] -> points_to[j] labeled 1_S; the diagonal idempotent when points_to is omitted."""
    if E.base.identity is None:
        raise BaseNotMonoid(f"base {E.base!r} has no identity")
    points_to = points_from if points_to is None else points_to
    if len(points_from) != len(points_to):
        raise ArityMismatch(f"{len(points_from)} points against {len(points_to)}")
    _distinct(points_from, "points")
    _distinct(points_to, "points")
    return ExtElement.of((a, E.base.identity, b) for a, b in zip(points_from, points_to))


def sandwich(E: ExtensionSemigroup, alpha: ExtElement, points_a: Sequence[int], points_b: Sequence[int]) -> ExtElement:
    return E.multiply(E.multiply(identity_labeled(E, points_a), alpha), identity_labeled(E, points_b))


def in_box_shape(alpha: ExtElement, points_a: Sequence[int], points_b: Sequence[int]) -> bool:
    if alpha.is_zero:
        return False
    return {(x, y) for x, _, y in alpha.triples} == set(zip(points_a, points_b))


def upset(E: ExtensionSemigroup, points_a: Sequence[int], points_b: Sequence[int]) -> FrozenSet[ExtElement]:
    """
    Elements whose sandwich between the identity-labeled idempotents lands on
    the pairing points_a[j] -> points_b[j]. A sandwich of full rank that pairs
    the same points crosswise (points_a[i] -> points_b[j], i != j) is excluded,
    so on rank k this is exactly the box with every coordinate set to S.
    """
    _check_points(E, points_a, points_b)
    return frozenset(
        a for a in E.elements() if in_box_shape(sandwich(E, a, points_a, points_b), points_a, points_b)
    )


def transport(
    E: ExtensionSemigroup,
    alpha: ExtElement,
    src: Tuple[Sequence[int], Sequence[int]],
    dst: Tuple[Sequence[int], Sequence[int]],
) -> ExtElement:
    """Carries the box on src = (a, b) onto the box on dst = (c, d), keeping labels."""
    (a, b), (c, d) = src, dst
    _check_points(E, a, b)
    _check_points(E, c, d)
    if len(a) != len(c):
        raise ArityMismatch(f"boxes of rank {len(a)} and {len(c)}")
    left = identity_labeled(E, c, a)
    right = identity_labeled(E, b, d)
    return E.multiply(E.multiply(left, alpha), right)


def s_extension(pi: PartialInjection, s, E: ExtensionSemigroup) -> ExtElement:
    if pi.lam != E.lam:
        raise CarrierMismatch(f"map on {pi.lam} points for an extension on {E.lam}")
    if pi.rank > E.n:
        raise RankExceeded(f"rank {pi.rank} exceeds n={E.n}")
    if not E.base.contains(s):
        raise ForeignElement(f"label {s!r} is outside the base")
    return ExtElement.of((x, s, y) for x, y in pi.pairs)


def restriction(E: ExtensionSemigroup, alpha: ExtElement) -> PartialInjection:
    if alpha.is_zero:
        return PartialInjection(E.lam, ())
    return PartialInjection(E.lam, tuple((x, y) for x, _, y in alpha.triples))


def brandt_extension(S: FiniteSemigroup, lam: int, guard: Optional[int] = None) -> Tuple[FiniteSemigroup, List]:
    """
    B_lam(S) on (lam x S x lam) + {0}: index 0 is the zero and
    1 + (i*|S| + a)*lam + j is (i, a, j).
    """
    limit = config.size_guard(guard)
    size = S.size
    m = 1 + lam * size * lam
    if m > limit:
        raise SizeGuardExceeded(m, limit)
    cells = [None] + [(i, a, j) for i in range(lam) for a in range(size) for j in range(lam)]

    def index(i: int, a: int, j: int) -> int:
        return 1 + (i * size + a) * lam + j

    table = np.zeros((m, m), dtype=np.int64)
    for i, a, j in cells[1:]:
        for b, l in product(range(size), range(lam)):
            table[index(i, a, j), index(j, b, l)] = index(i, S.multiply(a, b), l)
    names = ["0"] + [f"({i},{S.name(a)},{j})" for i, a, j in cells[1:]]
    return validate(table, names=names, guard=limit), cells


def brandt_iso(S: FiniteSemigroup, lam: int) -> bool:
    """Whether (i, a, j) -> [(i, a, j)] is an isomorphism B_lam(S) -> I_lam^1(S)."""
    B, cells = brandt_extension(S, lam)
    E = ExtensionSemigroup(lam, 1, S)

    def to_element(x: int) -> ExtElement:
        return ZERO if cells[x] is None else ExtElement((cells[x],))

    return is_morphism(to_element, B, E, require_bijective=True)
