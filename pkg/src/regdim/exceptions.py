"""
Exception hierarchy for regdim.

Input problems, internal invariant violations and failed verifications are
kept apart so the command line can map them to distinct exit codes.
"""


class RegdimError(Exception):
    """Base class for every error raised by regdim."""


class InputError(RegdimError):
    """The caller supplied data regdim cannot work with."""


class UnitIdealError(InputError):
    """R/I = 0; homological operations refuse the unit ideal."""

    def __init__(self, message: str = "unit ideal not supported"):
        super().__init__(message)


class IdealParseError(InputError):
    """A line of an ideal file could not be parsed."""

    def __init__(self, line: int, message: str):
        self.line = line
        self.message = message
        super().__init__(f"line {line}: {message}")


class InvariantViolation(RegdimError):
    """
    An internal consistency check failed.

    Raised for d∘d ≠ 0, chain maps that do not commute with differentials,
    non-bijective multiplication maps on the determined region and similar
    conditions. Any occurrence is a bug, never a property of the input.
    """


class VerificationFailure(RegdimError):
    """
    A verified inequality or filtration condition did not hold.

    Args:
        message: Human readable description of the failing inequality
        witness: Optional JSON-friendly payload identifying where it failed
    """

    def __init__(self, message: str, witness: dict | None = None):
        self.witness = witness or {}
        super().__init__(message)
