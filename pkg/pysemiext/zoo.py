from typing import Callable, Dict, List, Optional, Tuple
from .semigroup import FiniteSemigroup, validate
from .partial import matrix_units
from .errors import ParseError
from . import config

import os
import logging

BUILTIN_PREFIX = "builtin:"

# Between them these fail each of the regular, orthodox and inverse flags.
ZOO = ("trivial", "Z2", "min2", "leftzero2", "null2", "T2", "chain3", "nonortho5")
MONOID_ZOO = ("trivial", "Z2", "min2", "T2")


def parse_cayley(text: str, guard: Optional[int] = None) -> FiniteSemigroup:
    """
    Cayley text: the order m, then m rows of m 0-based entries (row is the
    left factor), then optional "identity=<i>", "zero=<i>" and
    "name <i> <string>" lines. '#' starts a comment.
    """
    lines: List[Tuple[int, str]] = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append((number, line))
    if not lines:
        raise ParseError(0, "empty input")

    number, first = lines[0]
    try:
        m = int(first)
    except ValueError:
        raise ParseError(number, f"expected the order, got {first!r}")
    if m < 1:
        raise ParseError(number, f"order must be positive, got {m}")
    if len(lines) < m + 1:
        raise ParseError(lines[-1][0], f"expected {m} table rows, found {len(lines) - 1}")

    rows = []
    for number, line in lines[1 : m + 1]:
        try:
            rows.append([int(token) for token in line.split()])
        except ValueError:
            raise ParseError(number, f"non-integer entry in row {line!r}")

    identity = zero = None
    names: Dict[int, str] = {}
    for number, line in lines[m + 1 :]:
        try:
            if line.startswith("identity="):
                identity = int(line[len("identity="):])
            elif line.startswith("zero="):
                zero = int(line[len("zero="):])
            elif line.startswith("name "):
                _, index, name = line.split(maxsplit=2)
                if not 0 <= int(index) < m:
                    raise ParseError(number, f"name index {index} outside 0..{m - 1}")
                names[int(index)] = name
            else:
                raise ParseError(number, f"unrecognized line {line!r}")
        except ValueError:
            raise ParseError(number, f"malformed line {line!r}")
    labels = [names.get(i, str(i)) for i in range(m)] if names else None
    return validate(rows, identity, zero, labels, guard)


def format_cayley(S: FiniteSemigroup) -> str:
    lines = [str(S.size)]
    lines.extend(" ".join(str(int(x)) for x in row) for row in S.table)
    if S.identity is not None:
        lines.append(f"identity={S.identity}")
    if S.zero is not None:
        lines.append(f"zero={S.zero}")
    if S.names is not None:
        lines.extend(f"name {i} {name}" for i, name in enumerate(S.names))
    return "\n".join(lines) + "\n"


def load_cayley(path: str, guard: Optional[int] = None) -> FiniteSemigroup:
    with open(path, "r") as f:
        text = f.read()
    logging.debug(f"Loading Cayley table from {path}")
    return parse_cayley(text, guard)


def _trivial() -> FiniteSemigroup:
    return validate([[0]], names=["1"])


def _z2() -> FiniteSemigroup:
    return validate([[0, 1], [1, 0]], names=["e", "g"])


def _min2() -> FiniteSemigroup:
    return validate([[0, 0], [0, 1]], names=["0", "1"])


def _leftzero2() -> FiniteSemigroup:
    return validate([[0, 0], [1, 1]], names=["a", "b"])


def _null2() -> FiniteSemigroup:
    return validate([[0, 0], [0, 0]], names=["0", "a"])


def _t2() -> FiniteSemigroup:
    # full transformations of {0, 1} acting on the right: id, swap, const0, const1
    table = [
        [0, 1, 2, 3],
        [1, 0, 2, 3],
        [2, 3, 2, 3],
        [3, 2, 2, 3],
    ]
    return validate(table, names=["id", "swap", "c0", "c1"])


def _chain3() -> FiniteSemigroup:
    return validate([[min(a, b) for b in range(3)] for a in range(3)], names=["0", "e", "1"])


def _nonortho5() -> FiniteSemigroup:
    return load_cayley(os.path.join(config.DATA_DIR, "nonortho5.txt"))


def _b2() -> FiniteSemigroup:
    return matrix_units(2)[0]


BUILTINS: Dict[str, Callable[[], FiniteSemigroup]] = {
    "trivial": _trivial,
    "Z2": _z2,
    "min2": _min2,
    "leftzero2": _leftzero2,
    "null2": _null2,
    "T2": _t2,
    "chain3": _chain3,
    "nonortho5": _nonortho5,
    "B2": _b2,
}


def builtin(name: str) -> FiniteSemigroup:
    if name not in BUILTINS:
        raise KeyError(f"unknown builtin {name!r}, expected one of {sorted(BUILTINS)}")
    return BUILTINS[name]()


def resolve(source: str, guard: Optional[int] = None) -> FiniteSemigroup:
    """A "builtin:NAME" identifier or a path to a Cayley text file."""
    if source.startswith(BUILTIN_PREFIX):
        try:
            return builtin(source[len(BUILTIN_PREFIX):])
        except KeyError as e:
            raise ParseError(0, str(e))
    return load_cayley(source, guard)
