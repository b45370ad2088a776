"""Exceptions shared across the package."""

from __future__ import annotations


class BetaWordsError(Exception):
    """Base class for all domain errors raised by this package."""


class InvalidSequence(BetaWordsError):
    """A digit sequence is not a well-formed expansion of 1 (shape-level)."""


class NotSelfDominant(InvalidSequence):
    """A digit sequence fails the shifted-comparison test for expansions of 1.

    ``shift`` is the smallest k >= 1 with sigma^k(seq) >= seq.
    """

    def __init__(self, shift: int, message: str | None = None):
        self.shift = shift
        super().__init__(message or f"shifted sequence at k={shift} is not lexicographically smaller")


class PrecisionExhausted(BetaWordsError):
    """A digit could not be certified at the available precision.

    ``position`` is the 1-based digit position that was undecidable.  Raised
    when beta sits too close to a discontinuity of the digit map (for
    example a simple Parry number given as a decimal).
    """

    def __init__(self, position: int, message: str | None = None):
        self.position = position
        super().__init__(message or f"digit at position {position} undecidable at available precision")


class AlphabetMismatch(BetaWordsError):
    """A word uses digits outside {0, ..., eps_1} for the given expansion."""


class NotAdmissible(BetaWordsError):
    """A word violates the admissibility (shifted-comparison) condition."""


class IntegerBeta(BetaWordsError):
    """An operation requires non-integer beta but the expansion is a single digit."""


class TailMismatch(BetaWordsError):
    """A word does not end with the claimed prefix of the expansion of 1."""


class VerificationError(BetaWordsError):
    """An internal cross-check that should hold by theorem failed."""
