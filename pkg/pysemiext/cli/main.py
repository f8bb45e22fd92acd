from typing import List, Optional
from .commands import COMMANDS, RunConfig
from .suites import SUITES
from .. import config

import argparse
import logging
import os
import sys

LOG_FILE = "pysemiext.log"


def setup_logging(log_dir: Optional[str], verbose: bool) -> None:
    log_formatter = logging.Formatter(
        "%(asctime)s - %(message)s",
    )
    root_logger = logging.getLogger()
    for handler in list(root_logger.handlers):
        if getattr(handler, "_pysemiext", False):
            root_logger.removeHandler(handler)
            handler.close()
    handlers: List[logging.Handler] = []
    if log_dir:
        if not os.path.exists(log_dir):
            os.makedirs(log_dir)
        with open(f"{log_dir}/{LOG_FILE}", "w"):
            pass
        handlers.append(logging.FileHandler(f"{log_dir}/{LOG_FILE}"))
    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel(logging.DEBUG if verbose else logging.WARNING)
    handlers.append(console_handler)
    for handler in handlers:
        handler.setFormatter(log_formatter)
        handler._pysemiext = True
        root_logger.addHandler(handler)
    root_logger.setLevel(logging.DEBUG if verbose else logging.INFO)


def _common(parser: argparse.ArgumentParser, lam: Optional[int], n: Optional[int]) -> None:
    parser.add_argument("--lambda", dest="lam", type=int, default=lam, help="number of points")
    parser.add_argument("--n", type=int, default=n, help="maximal rank")
    parser.add_argument("--size-guard", type=int, default=None,
                        help=f"element cap (default ${config.SIZE_GUARD_ENV} or {config.DEFAULT_SIZE_GUARD})")
    parser.add_argument("--format", dest="fmt", choices=("text", "json", "dot"), default="text")
    parser.add_argument("--seed", type=int, default=config.DEFAULT_SEED)
    parser.add_argument("--bound", type=int, default=config.DEFAULT_BICYCLIC_BOUND,
                        help="exponent bound for bicyclic witness searches")
    parser.add_argument("--log-dir", default="logs")
    parser.add_argument("--verbose", action="store_true")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pysemiext",
        description="Finite semigroups and their labeled partial-bijection extensions.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    validate = commands.add_parser("validate", help="check a Cayley table and classify it")
    validate.add_argument("input", help='a Cayley table file or "builtin:NAME"')
    _common(validate, None, None)

    extend = commands.add_parser("extend", help="count and classify I_lambda^n(S)")
    extend.add_argument("input")
    _common(extend, 2, 1)

    verify = commands.add_parser("verify", help="run a verification suite")
    verify.add_argument("suite", choices=sorted(SUITES) + ["all"])
    verify.add_argument("--input", dest="inputs", action="append", default=[],
                        help="base semigroup for the green suite, repeatable")
    verify.add_argument("--literal-reading", action="store_true",
                        help="congruence suite: only check the coordinatewise reading")
    _common(verify, None, None)

    eggbox = commands.add_parser("eggbox", help="Graphviz eggbox diagram of the Green classes")
    eggbox.add_argument("input")
    eggbox.add_argument("--extend", action="store_true", help="draw I_lambda^n(S) instead of S")
    eggbox.add_argument("--out", default=None, help="write the diagram to a file")
    _common(eggbox, 2, 1)
    return parser


def parse_config(parser: argparse.ArgumentParser, argv: Optional[List[str]]) -> RunConfig:
    args = parser.parse_args(argv)
    if args.size_guard is not None and args.size_guard < 1:
        parser.error("--size-guard must be positive")
    try:
        guard = config.size_guard(args.size_guard)
    except ValueError as e:
        parser.error(str(e))
    if args.lam is not None and args.lam < 1:
        parser.error("--lambda must be positive")
    if args.n is not None and args.n < 1:
        parser.error("--n must be positive")
    if args.lam is not None and args.n is not None and args.n > args.lam:
        parser.error(f"--n {args.n} exceeds --lambda {args.lam}")
    if args.bound < 0:
        parser.error("--bound must be non-negative")
    inputs = getattr(args, "inputs", None)
    if inputs is None:
        inputs = [args.input]
    setup_logging(args.log_dir, args.verbose)
    return RunConfig(
        command=args.command,
        inputs=tuple(inputs),
        lam=args.lam,
        n=args.n,
        size_guard=guard,
        fmt=args.fmt,
        seed=args.seed,
        bound=args.bound,
        suite=getattr(args, "suite", "all"),
        literal_reading=getattr(args, "literal_reading", False),
        extend=getattr(args, "extend", False),
        out=getattr(args, "out", None),
    )


def main(argv: Optional[List[str]] = None) -> int:
    cfg = parse_config(build_parser(), argv)
    logging.info(f"pysemiext {cfg.command}: {cfg}")
    return COMMANDS[cfg.command](cfg)


if __name__ == "__main__":
    sys.exit(main())
