"""Exception hierarchy shared by every module of the package."""


class DowkerError(ValueError):
    """Base class for all errors raised by dowkerrel."""


class RelationError(DowkerError):
    """Malformed relation: ragged rows, duplicate labels, bad dimensions."""


class LabelMismatchError(RelationError):
    """Two relations cannot be combined because their label lists differ."""


class NotSelfRelationError(RelationError):
    """An operation needing a self-relation got a relation with X != Y."""


class NotConvergentError(RelationError):
    """The powers of the relation cycle with period > 1, so R^inf is undefined."""


class NotStronglyConnectedError(DowkerError):
    pass


class UniverseMismatchError(DowkerError):
    """Two complexes live on different vertex universes."""


class MorphismError(DowkerError):
    """A vertex map is not defined on its domain or leaves its codomain."""


class NotBijectiveError(MorphismError):
    pass


class HypothesisError(DowkerError):
    """A filtration was requested for a relation that does not satisfy
    the totality (K side) or surjectivity (L side) hypothesis."""

    def __init__(self, message: str, counterexample_power: int | None = None):
        super().__init__(message)
        self.counterexample_power = counterexample_power


class ParseError(DowkerError):
    def __init__(self, message: str, lineno: int | None = None):
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)
        self.lineno = lineno
