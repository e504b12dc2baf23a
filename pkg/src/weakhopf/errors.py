"""Exception hierarchy shared by every module of the package."""


class WeakHopfError(Exception):
    """Base class for all errors raised by weakhopf."""


class FieldMismatch(WeakHopfError):
    pass


class DivisionByZero(WeakHopfError, ZeroDivisionError):
    pass


class BadParams(WeakHopfError):
    """Parameters that violate a construction's precondition."""


class NoSuchRoot(BadParams):
    pass


class ShapeMismatch(WeakHopfError):
    pass


class DimensionMismatch(WeakHopfError):
    pass


class InvalidStructure(WeakHopfError):
    pass


class ConsistencyError(WeakHopfError):
    """A consequence that must follow from validated hypotheses did not hold.

    Raised where a failure can only mean an implementation bug or an
    invalid object that slipped past validation.
    """


class NoAntipode(WeakHopfError):
    pass


class Underdetermined(WeakHopfError):
    def __init__(self, message: str, solution_dim: int):
        super().__init__(message)
        self.solution_dim = solution_dim


class NotAbelian(BadParams):
    pass


class BadCharacteristic(BadParams):
    pass


class NotHopf(WeakHopfError):
    pass


class NotSubgroup(BadParams):
    pass


class InvalidLambda(WeakHopfError):
    pass


class InvalidZ(WeakHopfError):
    pass


class InvalidComponent(BadParams):
    pass


class NotMatched(WeakHopfError):
    pass


class NotCompatible(WeakHopfError):
    pass


class PreconditionUnmet(WeakHopfError):
    pass


class WellDefinednessFailure(WeakHopfError):
    pass


class AntipodeAxiomFailure(WeakHopfError):
    pass


class NotAnIntegral(WeakHopfError):
    pass


class ConditionFails(WeakHopfError):
    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class UnknownExample(WeakHopfError):
    pass


class ParseError(WeakHopfError):
    def __init__(self, message: str, path: str = ""):
        super().__init__(f"{path}: {message}" if path else message)
        self.path = path
