"""Exception hierarchy for signedbalance."""


class BalanceError(Exception):
    """Base class for all errors raised by this package."""


class GraphError(BalanceError, ValueError):
    pass


class SelfLoopError(GraphError):
    pass


class ConflictingSignError(GraphError):
    """The same ordered pair was given both a positive and a negative sign."""


class InvalidSignError(GraphError):
    pass


class UnknownNodeError(GraphError, KeyError):
    pass


class EmptyGraphError(GraphError):
    pass


class IngestError(BalanceError, ValueError):
    pass


class MissingColumnError(IngestError):
    pass


class UnparsableWeightError(IngestError):
    pass


class EmptyFileError(IngestError):
    pass


class MalformedGmlError(IngestError):
    pass


class IncompleteRankingError(IngestError):
    pass


class ZeroWeightError(IngestError):
    pass


class InconsistentOptimaError(BalanceError, ValueError):
    """Partitions handed over as optima do not share one frustration count."""


class TooSmallError(BalanceError, ValueError):
    pass


class LengthMismatchError(BalanceError, ValueError):
    pass


class ZeroVarianceError(BalanceError, ValueError):
    pass


class ConfigError(BalanceError, ValueError):
    pass
