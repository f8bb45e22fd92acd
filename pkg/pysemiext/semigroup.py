from typing import Any, Callable, Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple
from itertools import product
from .abstract import FiniteCarrier
from .errors import (
    BadIdentity,
    BadZero,
    EmptySubset,
    MalformedTable,
    NonAssociative,
    NotIdempotent,
    SizeGuardExceeded,
)
from . import config

import numpy as np
import networkx as nx
import logging

RELATIONS = ("R", "L", "H", "D", "J")


class FiniteSemigroup(FiniteCarrier):
    """
    A finite semigroup on {0, ..., m-1} given by its Cayley table, where
    table[a, b] is the product a*b. Instances are built unchecked; use
    validate() to get one whose axioms have been verified.
    """

    def __init__(
        self,
        table,
        identity: Optional[int] = None,
        zero: Optional[int] = None,
        names: Optional[Sequence[str]] = None,
    ) -> None:
        self.table: np.ndarray = np.array(table, dtype=np.int64)
        self.table.flags.writeable = False
        self._identity = identity
        self._zero = zero
        self.names: Optional[Tuple[str, ...]] = tuple(names) if names else None

    @property
    def size(self) -> int:
        return self.table.shape[0]

    @property
    def identity(self) -> Optional[int]:
        return self._identity

    @property
    def zero(self) -> Optional[int]:
        return self._zero

    def multiply(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def elements(self) -> List[int]:
        return list(range(self.size))

    def __len__(self) -> int:
        return self.size

    def contains(self, x) -> bool:
        return isinstance(x, (int, np.integer)) and 0 <= x < self.size

    def name(self, x: int) -> str:
        if self.names is None:
            return str(x)
        return self.names[x]

    def as_table(self):
        return self, int

    def same_table(self, other: "FiniteSemigroup") -> bool:
        return np.array_equal(self.table, other.table)

    def __repr__(self) -> str:
        return f"FiniteSemigroup(size={self.size}, identity={self._identity}, zero={self._zero})"


def _identity_witness(table: np.ndarray, e: int) -> Optional[int]:
    idx = np.arange(table.shape[0])
    bad = np.flatnonzero((table[e] != idx) | (table[:, e] != idx))
    return int(bad[0]) if bad.size else None


def _zero_witness(table: np.ndarray, z: int) -> Optional[int]:
    bad = np.flatnonzero((table[z] != z) | (table[:, z] != z))
    return int(bad[0]) if bad.size else None


def associativity_witness(table: np.ndarray) -> Optional[Tuple[int, int, int]]:
    """First (a, b, c) in lexicographic order with (ab)c != a(bc), or None."""
    for a in range(table.shape[0]):
        # row a: left[b, c] = (ab)c and right[b, c] = a(bc)
        left = table[table[a]]
        right = table[a][table]
        bad = np.argwhere(left != right)
        if bad.size:
            return a, int(bad[0][0]), int(bad[0][1])
    return None


def validate(
    table,
    identity: Optional[int] = None,
    zero: Optional[int] = None,
    names: Optional[Sequence[str]] = None,
    guard: Optional[int] = None,
) -> FiniteSemigroup:
    """
    Checks a Cayley table and returns the semigroup it defines.

    When identity or zero is omitted it is detected from the table; when it is
    given it must satisfy its axiom.
    """
    try:
        array = np.array(table, dtype=np.int64)
    except (ValueError, TypeError) as e:
        raise MalformedTable(f"table is not a rectangular integer array: {e}")
    if array.ndim != 2 or array.shape[0] != array.shape[1] or array.shape[0] == 0:
        raise MalformedTable(f"table must be a non-empty square array, got shape {array.shape}")
    m = array.shape[0]
    limit = config.size_guard(guard)
    if m > limit:
        raise SizeGuardExceeded(m, limit)
    if array.min() < 0 or array.max() >= m:
        raise MalformedTable(f"entries must lie in 0..{m - 1}")
    if names is not None and len(names) != m:
        raise MalformedTable(f"{len(names)} names given for {m} elements")

    witness = associativity_witness(array)
    if witness is not None:
        raise NonAssociative(*witness)

    if identity is not None:
        if not 0 <= identity < m:
            raise BadIdentity(identity, identity)
        bad = _identity_witness(array, identity)
        if bad is not None:
            raise BadIdentity(identity, bad)
    else:
        identity = next((e for e in range(m) if _identity_witness(array, e) is None), None)

    if zero is not None:
        if not 0 <= zero < m:
            raise BadZero(zero, zero)
        bad = _zero_witness(array, zero)
        if bad is not None:
            raise BadZero(zero, bad)
    else:
        zero = next((z for z in range(m) if _zero_witness(array, z) is None), None)

    logging.debug(f"Validated semigroup of order {m} (identity={identity}, zero={zero})")
    return FiniteSemigroup(array, identity, zero, names)


def idempotents(S: FiniteSemigroup) -> FrozenSet[int]:
    diagonal = S.table[np.arange(S.size), np.arange(S.size)]
    return frozenset(int(e) for e in np.flatnonzero(diagonal == np.arange(S.size)))


def nat_leq(S: FiniteSemigroup, e: int, f: int) -> bool:
    for x in (e, f):
        if S.multiply(x, x) != x:
            raise NotIdempotent(x)
    return S.multiply(e, f) == e and S.multiply(f, e) == e


def regularity(S: FiniteSemigroup) -> Dict:
    """
    Regular elements, inverse sets and the regular/orthodox/inverse flags.
    An orthodox semigroup is regular with idempotents closed under product.
    """
    t = S.table
    idx = np.arange(S.size)
    regular = set()
    inverses: Dict[int, FrozenSet[int]] = {}
    for a in range(S.size):
        is_weak = t[t[a], a] == a
        # (b*a)*b for every b
        is_inverse = is_weak & (t[t[:, a], idx] == idx)
        if is_weak.any():
            regular.add(a)
        inverses[a] = frozenset(int(b) for b in np.flatnonzero(is_inverse))
    is_regular = len(regular) == S.size
    E = sorted(idempotents(S))
    products = t[np.ix_(E, E)]
    is_orthodox = is_regular and bool(np.all(t[products, products] == products))
    is_inverse = all(len(v) == 1 for v in inverses.values())
    return {
        "regular_elements": frozenset(regular),
        "inverses": inverses,
        "is_regular": is_regular,
        "is_orthodox": is_orthodox,
        "is_inverse": is_inverse,
    }


def adjoin_identity(S: FiniteSemigroup) -> FiniteSemigroup:
    """S with a fresh identity m adjoined, or S itself when it is a monoid."""
    if S.identity is not None:
        return S
    m = S.size
    table = np.empty((m + 1, m + 1), dtype=np.int64)
    table[:m, :m] = S.table
    table[m, :] = np.arange(m + 1)
    table[:, m] = np.arange(m + 1)
    names = list(S.names) + ["1"] if S.names else None
    return FiniteSemigroup(table, m, S.zero, names)


def principal_ideals(S: FiniteSemigroup) -> Dict[str, List[FrozenSet[int]]]:
    """The principal right ideals aS^1, left ideals S^1a and ideals S^1aS^1."""
    t = S.table
    right = [frozenset(int(x) for x in t[a]) | {a} for a in range(S.size)]
    left = [frozenset(int(x) for x in t[:, a]) | {a} for a in range(S.size)]
    two_sided = [frozenset().union(*(right[u] for u in left[a])) for a in range(S.size)]
    return {"right": right, "left": left, "two_sided": two_sided}


class GreenStructure:
    def __init__(self, classes: Dict[str, Tuple[FrozenSet[int], ...]]) -> None:
        self.classes = classes
        self._index: Dict[str, Dict[int, int]] = {}
        for relation, parts in classes.items():
            self._index[relation] = {x: i for i, part in enumerate(parts) for x in part}

    @property
    def R(self):
        return self.classes["R"]

    @property
    def L(self):
        return self.classes["L"]

    @property
    def H(self):
        return self.classes["H"]

    @property
    def D(self):
        return self.classes["D"]

    @property
    def J(self):
        return self.classes["J"]

    def class_index(self, relation: str, x: int) -> int:
        return self._index[relation][x]

    def class_of(self, relation: str, x: int) -> FrozenSet[int]:
        return self.classes[relation][self._index[relation][x]]

    def related(self, relation: str, a: int, b: int) -> bool:
        index = self._index[relation]
        return index[a] == index[b]

    def counts(self) -> Dict[str, int]:
        return {relation: len(parts) for relation, parts in self.classes.items()}


def _canonical(parts: Iterable[Iterable[int]]) -> Tuple[FrozenSet[int], ...]:
    return tuple(sorted((frozenset(p) for p in parts), key=min))


def green(S: FiniteSemigroup) -> GreenStructure:
    """
    Green's relations of a finite semigroup. R, L and J classes are the
    strongly connected components of the right, left and two-sided
    multiplication graphs; D is the join of R and L.
    """
    t = S.table
    nodes = range(S.size)
    right_graph = nx.DiGraph()
    left_graph = nx.DiGraph()
    right_graph.add_nodes_from(nodes)
    left_graph.add_nodes_from(nodes)
    for a in nodes:
        right_graph.add_edges_from((a, int(x)) for x in set(t[a].tolist()))
        left_graph.add_edges_from((a, int(x)) for x in set(t[:, a].tolist()))
    R = _canonical(nx.strongly_connected_components(right_graph))
    L = _canonical(nx.strongly_connected_components(left_graph))
    J = _canonical(nx.strongly_connected_components(nx.compose(right_graph, left_graph)))

    join = nx.Graph()
    join.add_nodes_from(nodes)
    for part in R + L:
        members = sorted(part)
        join.add_edges_from(zip(members, members[1:]))
    D = _canonical(nx.connected_components(join))

    r_index = {x: i for i, part in enumerate(R) for x in part}
    l_index = {x: i for i, part in enumerate(L) for x in part}
    cells: Dict[Tuple[int, int], set] = {}
    for x in nodes:
        cells.setdefault((r_index[x], l_index[x]), set()).add(x)
    H = _canonical(cells.values())

    assert set(D) == set(J), "D and J classes differ on a finite semigroup"
    for part in D:
        rows = {r_index[x] for x in part}
        columns = {l_index[x] for x in part}
        assert len(rows) * len(columns) == sum(
            1 for key in cells if key[0] in rows
        ), "R and L do not commute inside a D-class"
    return GreenStructure({"R": R, "L": L, "H": H, "D": D, "J": J})


def stability(S: FiniteSemigroup) -> Dict:
    """
    Left stability: S^1a contained in S^1ab forces equality. Right stability:
    cS^1 contained in dcS^1 forces equality. The witness is the first failing
    (a, b) pair for the left side, then the first failing (c, d) for the right.
    """
    ideals = principal_ideals(S)
    left, right = ideals["left"], ideals["right"]
    witness = None
    left_stable = True
    for a, b in product(range(S.size), repeat=2):
        ab = S.multiply(a, b)
        if left[a] < left[ab]:
            left_stable = False
            witness = {"side": "left", "pair": (a, b)}
            break
    right_stable = True
    for c, d in product(range(S.size), repeat=2):
        dc = S.multiply(d, c)
        if right[c] < right[dc]:
            right_stable = False
            if witness is None:
                witness = {"side": "right", "pair": (c, d)}
            break
    return {
        "left_stable": left_stable,
        "right_stable": right_stable,
        "stable": left_stable and right_stable,
        "witness": witness,
    }


class DirectPower(FiniteCarrier):
    """
    S^m as m-tuples multiplied coordinatewise, tuples ordered
    lexicographically. The semigroup attribute is the same structure as a
    Cayley table indexed by that order.
    """

    def __init__(self, factor: FiniteSemigroup, power: int, guard: Optional[int] = None) -> None:
        if power < 1:
            raise ValueError(f"power must be at least 1, got {power}")
        limit = config.size_guard(guard)
        count = factor.size**power
        if count > limit:
            raise SizeGuardExceeded(count, limit)
        self.factor = factor
        self.power = power
        self.tuples: List[Tuple[int, ...]] = list(product(range(factor.size), repeat=power))
        self.index: Dict[Tuple[int, ...], int] = {x: i for i, x in enumerate(self.tuples)}
        self._semigroup: Optional[FiniteSemigroup] = None

    @property
    def semigroup(self) -> FiniteSemigroup:
        if self._semigroup is None:
            coords = np.array(self.tuples, dtype=np.int64).reshape(len(self.tuples), self.power)
            table = np.zeros((len(self.tuples), len(self.tuples)), dtype=np.int64)
            for i in range(self.power):
                column = coords[:, i]
                table = table * self.factor.size + self.factor.table[column[:, None], column[None, :]]
            identity = self._lift(self.factor.identity)
            zero = self._lift(self.factor.zero)
            self._semigroup = FiniteSemigroup(table, identity, zero)
        return self._semigroup

    def _lift(self, x: Optional[int]) -> Optional[int]:
        return None if x is None else self.index[(x,) * self.power]

    @property
    def identity(self) -> Optional[Tuple[int, ...]]:
        e = self.factor.identity
        return None if e is None else (e,) * self.power

    @property
    def zero(self) -> Optional[Tuple[int, ...]]:
        z = self.factor.zero
        return None if z is None else (z,) * self.power

    def multiply(self, x: Tuple[int, ...], y: Tuple[int, ...]) -> Tuple[int, ...]:
        return tuple(self.factor.multiply(a, b) for a, b in zip(x, y))

    def elements(self) -> List[Tuple[int, ...]]:
        return self.tuples

    def __len__(self) -> int:
        return len(self.tuples)

    def contains(self, x) -> bool:
        return x in self.index

    def projection(self, i: int, x: Tuple[int, ...]) -> int:
        return x[i]

    def index_of(self, x: Tuple[int, ...]) -> int:
        return self.index[x]

    def as_table(self):
        return self.semigroup, self.index.__getitem__


def direct_power(S: FiniteSemigroup, m: int, guard: Optional[int] = None) -> DirectPower:
    return DirectPower(S, m, guard)


def ideal_witness(carrier: FiniteCarrier, D: Iterable) -> Optional[Dict]:
    """
    The first product escaping D (as {"element", "multiplier", "side",
    "product"}) or None when D is a two-sided ideal of the carrier.
    """
    members = set(D)
    if not members:
        raise EmptySubset("an ideal must be non-empty")
    backed = carrier.as_table()
    if backed is not None:
        table_semigroup, index_of = backed
        elements = carrier.elements()
        ordered = sorted(index_of(d) for d in members)
        mask = np.zeros(table_semigroup.size, dtype=bool)
        mask[ordered] = True
        t = table_semigroup.table
        for side, block in (("right", t[ordered, :]), ("left", t[:, ordered].T)):
            bad = np.argwhere(~mask[block])
            if bad.size:
                row, column = int(bad[0][0]), int(bad[0][1])
                return {
                    "element": elements[ordered[row]],
                    "multiplier": elements[column],
                    "side": side,
                    "product": elements[int(block[row, column])],
                }
        return None
    for d in members:
        for x in carrier.elements():
            for side, value in (("right", carrier.multiply(d, x)), ("left", carrier.multiply(x, d))):
                if value not in members:
                    return {"element": d, "multiplier": x, "side": side, "product": value}
    return None


def is_ideal(carrier: FiniteCarrier, D: Iterable) -> bool:
    return ideal_witness(carrier, D) is None


def is_subsemigroup(carrier: FiniteCarrier, X: Iterable) -> bool:
    members = set(X)
    if not members:
        raise EmptySubset("a subsemigroup must be non-empty")
    return all(carrier.multiply(a, b) in members for a in members for b in members)


def _as_function(f) -> Callable:
    if callable(f):
        return f
    return f.__getitem__


def is_morphism(
    f, S: FiniteCarrier, T: FiniteCarrier, require_bijective: bool = False
) -> bool:
    """
    Whether f (a mapping, sequence or callable) preserves products from S to
    T. With require_bijective the images must also exhaust T exactly once.
    """
    apply = _as_function(f)
    images = {x: apply(x) for x in S.elements()}
    if not all(T.contains(y) for y in images.values()):
        return False
    if require_bijective:
        if len(set(images.values())) != len(images) or len(images) != len(T):
            return False
    for a in S.elements():
        for b in S.elements():
            if images[S.multiply(a, b)] != T.multiply(images[a], images[b]):
                logging.debug(f"Morphism check failed on ({a}, {b})")
                return False
    return True
