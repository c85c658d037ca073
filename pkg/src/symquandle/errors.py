"""Exception types shared across the package."""

from __future__ import annotations

from dataclasses import dataclass

MAX_WITNESSES = 100


class MalformedInputError(ValueError):
    """Input data has the wrong shape, range, or type."""


class InconsistencyError(ValueError):
    """Input is well-formed but internally inconsistent (e.g. bad Morse counts)."""


@dataclass(frozen=True)
class Violation:
    """One failed instance of a named condition, with the tuple that breaks it."""

    condition: str
    witness: tuple

    def __str__(self) -> str:
        return f"{self.condition} fails at {self.witness}"


class ViolationError(Exception):
    """Raised by the ``verify_*`` functions when a structure fails its axioms."""

    def __init__(self, kind: str, violations: list[Violation]):
        self.kind = kind
        self.violations = list(violations)
        head = "; ".join(str(v) for v in self.violations[:3])
        more = len(self.violations) - 3
        if more > 0:
            head += f" (+{more} more)"
        super().__init__(f"invalid {kind}: {head}")


@dataclass(frozen=True)
class Check:
    """Outcome of a yes/no check; ``witness`` explains a failure."""

    ok: bool
    witness: str = ""

    def __bool__(self) -> bool:
        return self.ok
