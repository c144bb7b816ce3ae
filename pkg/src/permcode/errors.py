"""Exception types shared across the package."""

from __future__ import annotations


class BudgetExceededError(RuntimeError):
    """An exhaustive search outgrew its configured node or step budget."""


class ForbiddenPatternError(ValueError):
    """A permutation contains a pattern that the operation requires it to avoid."""

    def __init__(self, pattern: tuple[int, ...], positions: tuple[int, ...]):
        self.pattern = pattern
        self.positions = positions
        text = "".join(str(v) for v in pattern)
        where = ",".join(str(i) for i in positions)
        super().__init__(f"contains forbidden pattern {text} at positions {where}")


class InvalidWordError(ValueError):
    """A letter sequence violates one of the code word conditions C1-C3."""

    def __init__(self, condition: str, position: int):
        self.condition = condition
        self.position = position
        super().__init__(f"violates {condition} at position {position}")


class InvalidTailError(ValueError):
    """An integer tail is not non-decreasing or breaks its position bounds."""


class InvalidPathError(ValueError):
    """A lattice path fails the requirements of the requested operation."""
