"""Exception hierarchy shared by all leafsearch modules."""


class LeafSearchError(Exception):
    """Base class for all errors raised by this package."""


class GraphError(LeafSearchError):
    pass


class SelfLoopError(GraphError):
    pass


class DuplicateEdgeError(GraphError):
    pass


class DisconnectedError(GraphError):
    pass


class OutOfRangeError(GraphError):
    pass


class NotConnectedOrderingError(LeafSearchError):
    """Some vertex of the ordering has no earlier neighbor."""


class NotACliqueError(LeafSearchError):
    pass


class PrefixNotRealizedError(LeafSearchError):
    """Internal assertion: a clique prefix was not reproduced by the runner."""


class BudgetExceededError(LeafSearchError):
    """A configured enumeration or table-size cap was exceeded."""


class InvalidDecompositionError(LeafSearchError):
    pass


class DecompositionUnavailableError(LeafSearchError):
    """No decomposition of acceptable width could be produced."""


class InvalidSequenceError(LeafSearchError):
    pass


class NotGSOrderingError(LeafSearchError):
    pass


class AssumptionViolatedError(LeafSearchError):
    """A reduction precondition does not hold for the given instance."""


class MalformedClauseError(LeafSearchError):
    pass


class BadParameterError(LeafSearchError):
    pass


class ParseError(LeafSearchError):
    """File parsing failure; carries the offending line number."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
