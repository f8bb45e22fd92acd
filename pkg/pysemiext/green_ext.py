from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple
from dataclasses import dataclass
from itertools import permutations
from .extension import ExtElement, ExtensionSemigroup
from .semigroup import RELATIONS, GreenStructure
from .errors import BaseNotMonoid

import html
import logging

Witness = Optional[Tuple]


@dataclass(frozen=True)
class GreenCharReport:
    relation: str
    alpha: ExtElement
    beta: ExtElement
    char_result: bool
    brute_result: bool
    witness: Witness

    @property
    def agrees(self) -> bool:
        return self.char_result == self.brute_result

    def to_json(self) -> Dict:
        return {
            "relation": self.relation,
            "alpha": self.alpha.to_json(),
            "beta": self.beta.to_json(),
            "char_result": self.char_result,
            "brute_result": self.brute_result,
            "witness": self.witness,
        }


def _label_relation(E: ExtensionSemigroup, relation: str) -> Callable:
    if E.base.identity is None:
        raise BaseNotMonoid("Green characterizations need a monoid base")
    green_related = getattr(E.base, "green_related", None)
    if green_related is not None:
        return lambda s, t: green_related(s, t, relation)
    G = E.base_green()
    return lambda s, t: G.related(relation, s, t)


def _one_line(sigma: Sequence[int]) -> Tuple[int, ...]:
    return tuple(j + 1 for j in sigma)


def _special_cases(alpha: ExtElement, beta: ExtElement) -> Optional[Tuple[bool, Witness]]:
    if alpha.is_zero or beta.is_zero:
        return (True, ()) if alpha.is_zero and beta.is_zero else (False, None)
    if alpha.rank != beta.rank:
        return False, None
    return None


def _alignment(points: Sequence[int], targets: Sequence[int]) -> Optional[List[int]]:
    """sigma with points[j] == targets[sigma[j]], or None when the point sets differ."""
    slot = {p: j for j, p in enumerate(targets)}
    if set(points) != set(slot):
        return None
    return [slot[p] for p in points]


def _aligned(E: ExtensionSemigroup, alpha: ExtElement, beta: ExtElement, relation: str, by_domain: bool):
    special = _special_cases(alpha, beta)
    if special is not None:
        return special
    related = _label_relation(E, relation)
    if by_domain:
        sigma = _alignment(alpha.domain, beta.domain)
    else:
        sigma = _alignment(alpha.image, beta.image)
    if sigma is None:
        return False, None
    s, t = alpha.labels, beta.labels
    if all(related(s[j], t[sigma[j]]) for j in range(alpha.rank)):
        return True, _one_line(sigma)
    return False, None


def _search(E: ExtensionSemigroup, alpha: ExtElement, beta: ExtElement, relation: str):
    """Lexicographically least sigma relating every label of alpha to its image label in beta."""
    special = _special_cases(alpha, beta)
    if special is not None:
        return special
    related = _label_relation(E, relation)
    s, t = alpha.labels, beta.labels
    for sigma in permutations(range(alpha.rank)):
        if all(related(s[j], t[sigma[j]]) for j in range(alpha.rank)):
            return True, _one_line(sigma)
    return False, None


def char_R(E: ExtensionSemigroup, alpha: ExtElement, beta: ExtElement) -> Tuple[bool, Witness]:
    """Same domain; labels R-related along the matching of domain points."""
    return _aligned(E, alpha, beta, "R", by_domain=True)


def char_L(E: ExtensionSemigroup, alpha: ExtElement, beta: ExtElement) -> Tuple[bool, Witness]:
    """Same image; labels L-related along the matching of image points."""
    return _aligned(E, alpha, beta, "L", by_domain=False)


def char_D(E: ExtensionSemigroup, alpha: ExtElement, beta: ExtElement) -> Tuple[bool, Witness]:
    return _search(E, alpha, beta, "D")


def char_J(E: ExtensionSemigroup, alpha: ExtElement, beta: ExtElement) -> Tuple[bool, Witness]:
    return _search(E, alpha, beta, "J")


def char_H(E: ExtensionSemigroup, alpha: ExtElement, beta: ExtElement) -> Tuple[bool, Witness]:
    """
    R along the domain matching and L along the image matching. The two
    permutations are independent, so labels need not be H-related pairwise.
    """
    r_related, sigma = char_R(E, alpha, beta)
    l_related, rho = char_L(E, alpha, beta)
    if r_related and l_related:
        return True, (sigma, rho)
    return False, None


def labelwise_h(E: ExtensionSemigroup, alpha: ExtElement, beta: ExtElement) -> bool:
    """One permutation matching domains and images at once with labels H-related."""
    special = _special_cases(alpha, beta)
    if special is not None:
        return special[0]
    sigma = _alignment(alpha.domain, beta.domain)
    if sigma is None or sigma != _alignment(alpha.image, beta.image):
        return False
    related = _label_relation(E, "H")
    return all(related(alpha.labels[j], beta.labels[sigma[j]]) for j in range(alpha.rank))


CHARACTERIZATIONS = {"R": char_R, "L": char_L, "H": char_H, "D": char_D, "J": char_J}


def brute_related(E: ExtensionSemigroup, relation: str, alpha: ExtElement, beta: ExtElement) -> bool:
    m = E.materialize()
    return E.green().related(relation, m.index_of(alpha), m.index_of(beta))


def cross_check_green(E: ExtensionSemigroup, relations: Iterable[str] = RELATIONS) -> List[GreenCharReport]:
    """Every ordered pair under every relation, characterization against the materialized table."""
    relations = tuple(relations)
    m = E.materialize()
    G = E.green()
    reports = []
    for alpha in m.elements:
        for beta in m.elements:
            for relation in relations:
                char_result, witness = CHARACTERIZATIONS[relation](E, alpha, beta)
                brute_result = G.related(relation, m.index_of(alpha), m.index_of(beta))
                report = GreenCharReport(relation, alpha, beta, char_result, brute_result, witness)
                if not report.agrees:
                    logging.debug(f"Green mismatch: {report.to_json()}")
                reports.append(report)
    logging.info(
        f"Green cross-check on {E!r}: {len(reports)} verdicts, "
        f"{sum(not r.agrees for r in reports)} mismatches"
    )
    return reports


def mismatches(reports: Iterable[GreenCharReport]) -> List[GreenCharReport]:
    return [r for r in reports if not r.agrees]


def eggbox_export(G: GreenStructure, names: Optional[Sequence[str]] = None, title: str = "eggbox") -> str:
    """
    Graphviz text with one cluster per D-class, drawn as a table whose rows
    are R-classes, columns L-classes and cells H-classes.
    """

    def label(x: int) -> str:
        return html.escape(names[x] if names else str(x))

    lines = [f"digraph {title} {{", "    node [shape=plaintext];"]
    for i, d_class in enumerate(G.D):
        rows = [r for r in G.R if r <= d_class]
        columns = [c for c in G.L if c <= d_class]
        lines.append(f"    subgraph cluster_{i} {{")
        lines.append(f'        label="D{i}";')
        lines.append(f'        d{i} [label=<<TABLE BORDER="0" CELLBORDER="1" CELLSPACING="0">')
        for row in rows:
            cells = []
            for column in columns:
                members = sorted(row & column)
                cells.append("<TD>" + " ".join(label(x) for x in members) + "</TD>")
            lines.append("            <TR>" + "".join(cells) + "</TR>")
        lines.append("        </TABLE>>];")
        lines.append("    }")
    lines.append("}")
    return "\n".join(lines) + "\n"
