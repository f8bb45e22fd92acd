from typing import Callable, Dict, Optional, Tuple
from dataclasses import dataclass
from functools import wraps
from ..semigroup import green, idempotents, regularity, stability
from ..extension import ExtensionSemigroup, j0_ideal, quotient
from ..green_ext import eggbox_export
from ..errors import MalformedTable, ParseError, SemigroupError, SizeGuardExceeded
from ..zoo import resolve
from .. import config
from . import suites

import json
import logging

FLAGS = ("is_regular", "is_orthodox", "is_inverse")


@dataclass(frozen=True)
class RunConfig:
    command: str
    inputs: Tuple[str, ...] = ()
    lam: Optional[int] = None
    n: Optional[int] = None
    size_guard: int = config.DEFAULT_SIZE_GUARD
    fmt: str = "text"
    seed: int = config.DEFAULT_SEED
    bound: int = config.DEFAULT_BICYCLIC_BOUND
    suite: str = "all"
    literal_reading: bool = False
    extend: bool = False
    out: Optional[str] = None


def emit(report: Dict, cfg: RunConfig) -> None:
    if cfg.fmt == "json":
        payload = {k: v for k, v in report.items() if k != "text"}
        print(json.dumps(payload, indent=4, default=str))
        return
    for line in report.get("text", []):
        print(line)


def command_handler(func: Callable[[RunConfig], Dict]) -> Callable[[RunConfig], int]:
    """Runs a command, prints its report and maps failures to exit codes 1, 2 or 3."""

    @wraps(func)
    def wrapper(cfg: RunConfig) -> int:
        try:
            report: Dict = func(cfg)
            logging.debug(f"{func.__name__} report: {json.dumps(report, indent=4, default=str)}")
            emit(report, cfg)
            return 0 if report.get("status", "SUCCESSFUL") == "SUCCESSFUL" else 2
        except SizeGuardExceeded as e:
            logging.error(f"{type(e).__name__}: {e}", exc_info=True)
            print(f"error: {e}")
            return 3
        except (ParseError, MalformedTable, OSError) as e:
            logging.error(f"{type(e).__name__}: {e}", exc_info=True)
            print(f"error: {type(e).__name__}: {e}")
            return 1
        except SemigroupError as e:
            logging.error(f"{type(e).__name__}: {e}", exc_info=True)
            print(f"error: {type(e).__name__}: {e}")
            return 2

    return wrapper


def classify(flags: Dict) -> str:
    if flags["is_inverse"]:
        return "inverse"
    if flags["is_orthodox"]:
        return "orthodox, not inverse"
    if flags["is_regular"]:
        return "regular, not orthodox"
    return "not regular"


def _input(cfg: RunConfig) -> str:
    if not cfg.inputs:
        raise ParseError(0, "no input semigroup given")
    return cfg.inputs[0]


@command_handler
def cmd_validate(cfg: RunConfig) -> Dict:
    S = resolve(_input(cfg), cfg.size_guard)
    flags = regularity(S)
    E = sorted(idempotents(S))
    counts = green(S).counts()
    stable = stability(S)
    kind = "monoid" if S.identity is not None else "semigroup"
    summary = f"{classify(flags)} {kind}, {len(E)} idempotents"
    return {
        "status": "SUCCESSFUL",
        "summary": summary,
        "order": S.size,
        "identity": S.identity,
        "zero": S.zero,
        "idempotents": [S.name(e) for e in E],
        "flags": {k: flags[k] for k in FLAGS},
        "green_counts": counts,
        "stable": stable["stable"],
        "text": [
            summary,
            f"order: {S.size}",
            f"identity: {S.identity if S.identity is None else S.name(S.identity)}",
            f"zero: {S.zero if S.zero is None else S.name(S.zero)}",
            "idempotents: " + " ".join(S.name(e) for e in E),
            " ".join(f"{k[3:]}={flags[k]}" for k in FLAGS),
            "green classes: " + " ".join(f"{k}={v}" for k, v in counts.items()),
            f"stable: {stable['stable']}",
        ],
    }


@command_handler
def cmd_extend(cfg: RunConfig) -> Dict:
    S = resolve(_input(cfg), cfg.size_guard)
    E = ExtensionSemigroup(cfg.lam, cfg.n, S, cfg.size_guard)
    closed = E.count()
    if closed > cfg.size_guard:
        raise SizeGuardExceeded(closed, cfg.size_guard)
    enumerated = len(E.elements())
    base_flags = regularity(S)
    ext_flags = regularity(E.materialize().semigroup)
    table = {k: {"base": base_flags[k], "extension": ext_flags[k]} for k in FLAGS}
    report = {
        "status": "SUCCESSFUL" if closed == enumerated else "FAILED",
        "lambda": cfg.lam,
        "n": cfg.n,
        "count_closed_form": closed,
        "count_enumerated": enumerated,
        "flags": table,
    }
    text = [
        f"lambda={cfg.lam} n={cfg.n} base order {S.size}",
        f"elements: {closed} (closed form), {enumerated} (enumerated)",
    ]
    if S.zero is not None:
        report["j0_size"] = len(j0_ideal(E))
        quotient_flags = regularity(quotient(E).semigroup)
        for k in FLAGS:
            table[k]["quotient"] = quotient_flags[k]
        text.append(f"J0: {report['j0_size']} elements")
    text.append("flag          base   extension" + ("  quotient" if S.zero is not None else ""))
    for k in FLAGS:
        row = f"{k[3:]:<13} {str(table[k]['base']):<6} {str(table[k]['extension']):<9}"
        if "quotient" in table[k]:
            row += f"  {table[k]['quotient']}"
        text.append(row.rstrip())
    report["text"] = text
    return report


@command_handler
def cmd_verify(cfg: RunConfig) -> Dict:
    report = suites.run_suite(cfg.suite, cfg)
    text = [f"{report['suite']}: {report['status']}"]
    for check in report["checks"]:
        mark = "ok" if check["passed"] else "FAILED"
        text.append(f"  [{mark}] {check['name']}" + (f": {check['detail']}" if check.get("detail") else ""))
    if report.get("note"):
        text.append(report["note"])
    if report["status"] != "SUCCESSFUL":
        text.append(f"first failure: {report['first_failure']}")
    report["text"] = text
    return report


@command_handler
def cmd_eggbox(cfg: RunConfig) -> Dict:
    S = resolve(_input(cfg), cfg.size_guard)
    if cfg.extend:
        E = ExtensionSemigroup(cfg.lam, cfg.n, S, cfg.size_guard)
        S = E.materialize().semigroup
        names = list(S.names)
    else:
        names = list(S.names) if S.names else None
    G = green(S)
    diagram = eggbox_export(G, names)
    report = {"status": "SUCCESSFUL", "clusters": len(G.D), "out": cfg.out}
    if cfg.out:
        with open(cfg.out, "w") as f:
            f.write(diagram)
        logging.info(f"Eggbox with {len(G.D)} D-classes written to {cfg.out}")
        report["text"] = [f"{len(G.D)} D-classes written to {cfg.out}"]
    else:
        report["diagram"] = diagram
        report["text"] = [diagram.rstrip("\n")]
    return report


COMMANDS = {
    "validate": cmd_validate,
    "extend": cmd_extend,
    "verify": cmd_verify,
    "eggbox": cmd_eggbox,
}
