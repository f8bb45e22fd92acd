from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple
from dataclasses import dataclass
from itertools import combinations, permutations
from .abstract import FiniteCarrier
from .semigroup import FiniteSemigroup, is_morphism
from .errors import CarrierMismatch, DuplicatePoints, NotIdempotent, SizeGuardExceeded
from . import config

import numpy as np
import math


@dataclass(frozen=True, order=True)
class PartialInjection:
    """
    A partial one-to-one map on {0, ..., lam-1}, stored as (x, y) pairs sorted
    by x. Maps act on the right: x(alpha beta) = (x alpha) beta.
    """

    lam: int
    pairs: Tuple[Tuple[int, int], ...]

    def __post_init__(self) -> None:
        xs = [x for x, _ in self.pairs]
        ys = [y for _, y in self.pairs]
        if len(set(xs)) != len(xs) or len(set(ys)) != len(ys):
            raise DuplicatePoints(f"{self.pairs} is not injective")
        if xs != sorted(xs):
            raise ValueError(f"pairs must be sorted by domain point: {self.pairs}")
        if any(not 0 <= p < self.lam for p in xs + ys):
            raise ValueError(f"points must lie in 0..{self.lam - 1}: {self.pairs}")

    @classmethod
    def from_pairs(cls, pairs: Iterable[Tuple[int, int]], lam: int) -> "PartialInjection":
        return cls(lam, tuple(sorted((int(x), int(y)) for x, y in pairs)))

    @property
    def domain(self) -> Tuple[int, ...]:
        return tuple(x for x, _ in self.pairs)

    @property
    def image(self) -> Tuple[int, ...]:
        return tuple(y for _, y in self.pairs)

    @property
    def rank(self) -> int:
        return len(self.pairs)

    @property
    def is_idempotent(self) -> bool:
        return all(x == y for x, y in self.pairs)

    def __call__(self, x: int) -> Optional[int]:
        return dict(self.pairs).get(x)

    def render(self) -> str:
        if not self.pairs:
            return "0"
        top = " ".join(str(x) for x in self.domain)
        bottom = " ".join(str(y) for y in self.image)
        return f"({top} / {bottom})"

    def __str__(self) -> str:
        return self.render()


def pi_compose(alpha: PartialInjection, beta: PartialInjection) -> PartialInjection:
    if alpha.lam != beta.lam:
        raise CarrierMismatch(f"cannot compose maps on {alpha.lam} and {beta.lam} points")
    lookup = dict(beta.pairs)
    pairs = tuple((x, lookup[y]) for x, y in alpha.pairs if y in lookup)
    return PartialInjection(alpha.lam, pairs)


def pi_invert(alpha: PartialInjection) -> PartialInjection:
    return PartialInjection.from_pairs(((y, x) for x, y in alpha.pairs), alpha.lam)


def pi_rank(alpha: PartialInjection) -> int:
    return alpha.rank


def identity_on(points: Iterable[int], lam: int) -> PartialInjection:
    return PartialInjection.from_pairs(((p, p) for p in points), lam)


def idempotent_order(alpha: PartialInjection, beta: PartialInjection) -> bool:
    """Natural order on idempotents: id_A <= id_B exactly when A is inside B."""
    for x in (alpha, beta):
        if not x.is_idempotent:
            raise NotIdempotent(x)
    return set(alpha.domain) <= set(beta.domain)


def count_In(lam: int, n: int) -> int:
    """|I_lam^n| including the empty map."""
    return sum(math.comb(lam, k) ** 2 * math.factorial(k) for k in range(0, n + 1))


def enumerate_In(lam: int, n: int, guard: Optional[int] = None) -> Iterator[PartialInjection]:
    """
    Maps of rank at most n ordered by rank, then by domain points, then by
    image points, the empty map first.
    """
    limit = config.size_guard(guard)
    total = count_In(lam, n)
    if total > limit:
        raise SizeGuardExceeded(total, limit)
    for k in range(0, n + 1):
        for domain in combinations(range(lam), k):
            for image in permutations(range(lam), k):
                yield PartialInjection(lam, tuple(zip(domain, image)))


class SymmetricInverseSemigroup(FiniteCarrier):
    """I_lam^n: partial injections of rank at most n under composition."""

    def __init__(self, lam: int, n: Optional[int] = None, guard: Optional[int] = None) -> None:
        self.lam = lam
        self.n = lam if n is None else n
        self._elements = list(enumerate_In(lam, self.n, guard))

    @property
    def identity(self) -> Optional[PartialInjection]:
        if self.n < self.lam:
            return None
        return identity_on(range(self.lam), self.lam)

    @property
    def zero(self) -> PartialInjection:
        return PartialInjection(self.lam, ())

    def multiply(self, a: PartialInjection, b: PartialInjection) -> PartialInjection:
        return pi_compose(a, b)

    def elements(self) -> List[PartialInjection]:
        return self._elements

    def contains(self, x) -> bool:
        return isinstance(x, PartialInjection) and x.lam == self.lam and x.rank <= self.n


def matrix_units(lam: int, guard: Optional[int] = None) -> Tuple[FiniteSemigroup, List]:
    """
    The Brandt semigroup B_lam: element 0 is the zero and element
    1 + a*lam + b is the matrix unit (a, b), with (a, b)(c, d) = (a, d) when
    b == c and 0 otherwise.
    """
    limit = config.size_guard(guard)
    m = 1 + lam * lam
    if m > limit:
        raise SizeGuardExceeded(m, limit)
    table = np.zeros((m, m), dtype=np.int64)
    for a, b, d in np.ndindex(lam, lam, lam):
        table[1 + a * lam + b, 1 + b * lam + d] = 1 + a * lam + d
    units = [(a, b) for a in range(lam) for b in range(lam)]
    names = ["0"] + [f"({a},{b})" for a, b in units]
    return FiniteSemigroup(table, None if lam > 1 else 1, 0, names), [None] + units


def matrix_units_iso(lam: int) -> bool:
    """Checks that (a, b) -> {a -> b} is an isomorphism from B_lam onto I_lam^1."""
    B, units = matrix_units(lam)
    target = SymmetricInverseSemigroup(lam, 1)

    def to_map(i: int) -> PartialInjection:
        if units[i] is None:
            return PartialInjection(lam, ())
        return PartialInjection(lam, (units[i],))

    return is_morphism(to_map, B, target, require_bijective=True)
