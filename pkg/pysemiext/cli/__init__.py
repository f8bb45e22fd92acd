from .main import main, build_parser
from .commands import RunConfig, COMMANDS
from .suites import SUITES, run_suite

__all__ = [
    "main",
    "build_parser",
    "RunConfig",
    "COMMANDS",
    "SUITES",
    "run_suite",
]
