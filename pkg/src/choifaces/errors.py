"""Exception types raised by choifaces."""


class ChoiFacesError(Exception):
    """Base class for all errors raised by this package."""


class DimensionMismatch(ChoiFacesError, ValueError):
    pass


class NonHermitian(ChoiFacesError, ValueError):
    pass


class NotPSD(ChoiFacesError, ValueError):
    pass


class NotMember(ChoiFacesError, ValueError):
    """The matrix is not the Choi matrix of a quantum channel."""


class NotUnitary(ChoiFacesError, ValueError):
    pass


class InvalidDirection(ChoiFacesError, ValueError):
    """A face direction is not Hermitian, not block-traceless or leaves the range."""


class DegenerateDirection(ChoiFacesError, ValueError):
    """A face direction has no negative eigenvalue, so the ray never exits the set."""


class RankTooHigh(ChoiFacesError, ValueError):
    pass


class BadDimension(ChoiFacesError, ValueError):
    pass


class Infeasible(ChoiFacesError, ValueError):
    pass


class DegenerateSample(ChoiFacesError, RuntimeError):
    pass


class IterationOverflow(ChoiFacesError, RuntimeError):
    pass


class DecompositionOverflow(ChoiFacesError, RuntimeError):
    pass


class UnknownExample(ChoiFacesError, KeyError):
    def __str__(self):
        return str(self.args[0]) if self.args else ""
