"""Exception types shared across the package."""


class RecolorError(Exception):
    """Base class for all package errors."""


class GraphFormatError(RecolorError):
    """Malformed graph, coloring, sequence or decomposition input."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class InvalidColoringError(RecolorError):
    """A coloring violates properness or its palette."""


class PreconditionError(RecolorError):
    """An algorithm's guard is not satisfied (refusal, not a bug)."""


class BudgetExceededError(RecolorError):
    """A size or state-count guard was exceeded."""


class SequenceError(RecolorError):
    """A recoloring sequence is invalid (bad step index, improper state)."""

    def __init__(self, message, step=None):
        if step is not None:
            message = f"step {step}: {message}"
        super().__init__(message)
        self.step = step


class AlgorithmError(RecolorError):
    """An internal invariant failed; indicates a bug, never user error."""
