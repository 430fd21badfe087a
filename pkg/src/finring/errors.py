"""Exception types shared across the package."""


class FinringError(Exception):
    """Base class for all errors raised by finring."""


class TableStructureError(FinringError):
    """Operation tables are malformed: wrong shape, dtype, or out-of-range entries."""


class AxiomViolationError(FinringError):
    """A table that was required to be a ring fails one of the ring laws.

    Carries the full AxiomReport so callers can inspect the witness.
    """

    def __init__(self, report, message=None):
        self.report = report
        if message is None:
            law, witness = report.violations[0]
            message = f"ring law {law!r} fails at witness {witness}"
        super().__init__(message)


class NotAnIdealError(FinringError):
    """The element set handed to quotient() is not a two-sided ideal."""


class PresentationError(FinringError):
    """Presentation text cannot be parsed, or the presented ring cannot be built."""


class ExpressionError(FinringError):
    """A ring expression string cannot be parsed."""


class RingFormatError(FinringError):
    """A serialized ring file violates the RINGTAB format; carries a line number."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class InternalCheckError(FinringError):
    """An internal consistency assertion failed; indicates a bug, not bad input."""
