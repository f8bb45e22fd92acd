import os

DEFAULT_SIZE_GUARD = 20000
SIZE_GUARD_ENV = "SEMIEXT_SIZE_GUARD"

DEFAULT_BICYCLIC_BOUND = 5
DEFAULT_SEED = 0

# Above this many elements associativity of an extension is spot-checked.
EXHAUSTIVE_ASSOCIATIVITY_LIMIT = 200
RANDOM_TRIPLES = 2000

DATA_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), "data")


def size_guard(override: int = None) -> int:
    if override is None:
        raw = os.environ.get(SIZE_GUARD_ENV)
        if raw is None:
            return DEFAULT_SIZE_GUARD
        try:
            override = int(raw)
        except ValueError:
            raise ValueError(f"{SIZE_GUARD_ENV} must be an integer, got {raw!r}")
    if override < 1:
        raise ValueError(f"size guard must be positive, got {override}")
    return override
