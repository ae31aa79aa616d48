"""Error hierarchy and enumeration guards.

Exit-code mapping used by the CLI: SchemaError -> 1, IntegrityError -> 2,
GuardExceeded -> 3.
"""

import os


class TractaError(Exception):
    pass


class SchemaError(TractaError):
    """Malformed or inconsistent input (bad JSON, zero Plucker function, ...)."""


class IntegrityError(TractaError):
    """A mathematical identity that must hold for valid inputs failed."""


class GuardExceeded(TractaError):
    """An enumeration was larger than the configured guard."""


DEFAULT_GUARD = 10_000_000


def guard_limit() -> int:
    raw = os.environ.get("TRACTA_GUARD")
    if raw is None:
        return DEFAULT_GUARD
    try:
        return int(raw)
    except ValueError:
        raise SchemaError(f"TRACTA_GUARD must be an integer, got {raw!r}")


def check_guard(size: int, what: str) -> None:
    limit = guard_limit()
    if size > limit:
        raise GuardExceeded(f"{what}: {size} exceeds guard {limit}")
