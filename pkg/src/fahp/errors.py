"""Exception hierarchy shared by all engine modules."""


class FahpError(Exception):
    """Base class for every error raised by the engine."""


class NonPositiveComponent(FahpError):
    """A TFN component is <= 0 where strict positivity is required."""


class DivisionByZeroComponent(FahpError):
    """A divisor TFN has a zero component."""


class NonPositiveValue(FahpError):
    """A geometric mean input is <= 0."""


class EmptyList(FahpError):
    """An aggregate was requested over an empty collection."""


class UnknownTerm(FahpError):
    """A linguistic term is not present in the active scale."""


class AllZeroWeights(FahpError):
    """Every minimum possibility degree is 0; normalization impossible."""


class ZeroColumnSum(FahpError):
    """A crisp matrix column sums to zero."""


class LengthMismatch(FahpError):
    """Paired vectors have different lengths."""


class RiUnavailable(FahpError):
    """No random-index entry for the requested matrix size."""


class MissingJudgment(FahpError):
    """No expert judged a cell in sparse aggregation."""


class IncompleteWeights(FahpError):
    """A non-leaf node has no usable local weights."""


class ZeroN(FahpError):
    """A survey tally has zero total responses."""


class DegenerateInput(FahpError):
    """A rank panel is too small for concordance analysis."""


class ValidationError(FahpError):
    """A project or matrix invariant is violated.

    Carries enough context (node id, cell position) to point the user at
    the offending input.
    """

    def __init__(self, message, node=None, cell=None):
        super().__init__(message)
        self.node = node
        self.cell = cell


class ParseError(FahpError):
    """A project file is not well-formed."""

    def __init__(self, message, line=None, column=None):
        super().__init__(message)
        self.line = line
        self.column = column
