"""Exception hierarchy shared by every module.

The CLI maps these onto its exit-code contract, so library code should raise
the most specific class that applies instead of bare ValueError.
"""


class BarjanetError(Exception):
    """Base class for all errors raised by this package."""


class TermSyntaxError(BarjanetError):
    """Malformed term or input file; carries the offending position."""

    def __init__(self, message, position=None, line=None):
        self.position = position
        self.line = line
        where = ""
        if line is not None:
            where += f" (line {line}"
            where += f", column {position + 1})" if position is not None else ")"
        elif position is not None:
            where += f" (column {position + 1})"
        super().__init__(message + where)


class DimensionError(BarjanetError):
    """Mismatched variable counts, or an index outside 1..n."""


class EmptyInputError(BarjanetError):
    """An operation that needs at least one term received none."""


class MembershipError(BarjanetError):
    """A term was required to belong to the given set but does not."""


class AdmissibilityError(BarjanetError):
    """Operation defined only for admissible bar codes (order ideals)."""


class InputError(BarjanetError):
    """Inconsistent user input, e.g. duplicate points or bad labels."""


class SingularMatrixError(BarjanetError):
    """The evaluation matrix is not invertible."""


class InternalInvariantError(BarjanetError):
    """A property the algorithms guarantee was violated; indicates a bug."""


class CompletionBoundError(InternalInvariantError):
    """Completion produced a candidate outside the bounding box of the input."""
