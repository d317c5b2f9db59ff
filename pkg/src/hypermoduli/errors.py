"""Exception hierarchy shared by all modules."""


class HyperModuliError(Exception):
    """Base class for library errors."""


class DivisibilityError(HyperModuliError, ValueError):
    pass


class CharTwoError(HyperModuliError, ValueError):
    pass


class ReducibleModulusError(HyperModuliError, ValueError):
    pass


class PrecisionError(HyperModuliError, ArithmeticError):
    """Numeric certification failed; retry with more precision."""


class NeedsExtension(HyperModuliError):
    """The working field lacks a required element."""

    def __init__(self, message: str, suggested_order: int | None = None):
        super().__init__(message)
        self.suggested_order = suggested_order


class InfiniteOrUnboundedError(HyperModuliError):
    pass


class NotSquarefreeError(HyperModuliError, ValueError):
    pass


class GenusTooSmallError(HyperModuliError, ValueError):
    pass


class AmbiguousCandidate(HyperModuliError):
    """A numerically valid candidate could not be reconstructed exactly."""

    def __init__(self, message: str, data=None):
        super().__init__(message)
        self.data = data


class UnsupportedCase(HyperModuliError, ValueError):
    pass


class FieldOfModuliNotReal(HyperModuliError):
    pass


class AveragingFailure(HyperModuliError):
    pass


class SpecViolation(HyperModuliError, ValueError):
    """Counterexample parameters violate a hypothesis; ``clause`` names it."""

    def __init__(self, clause: str, message: str):
        super().__init__(f"{clause}: {message}")
        self.clause = clause


class VerificationFailure(HyperModuliError):
    def __init__(self, clause: str, message: str):
        super().__init__(f"{clause}: {message}")
        self.clause = clause
