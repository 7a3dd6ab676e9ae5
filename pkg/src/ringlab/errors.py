"""Exception types shared across the package."""

from __future__ import annotations


class RingLabError(Exception):
    """Base class for all errors raised by this package."""


class RingConstructionError(RingLabError):
    """A carrier failed a ring axiom or a structural precondition."""


class HomomorphismError(RingLabError):
    """A map failed a homomorphism axiom; carries a witness pair."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class CrossRingError(RingLabError):
    """Arithmetic attempted between elements of different rings."""


class BudgetExceededError(RingLabError):
    """A size or search budget was exceeded."""


class ClassifierDefect(RingLabError):
    """Two independent decision paths disagreed; carries the witness."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class SpecParseError(RingLabError):
    """A spec file failed to parse or resolve; carries a position."""

    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"{line}:{col}: {message}")
        self.message = message
        self.line = line
        self.col = col
