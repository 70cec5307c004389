"""Exception hierarchy shared by every module."""


class HopfGaloisError(Exception):
    pass


class DimensionMismatch(HopfGaloisError, ValueError):
    pass


class IllDefined(HopfGaloisError):
    """A map was asked to descend to a quotient whose relations it does not kill."""


class NotLeftHopf(HopfGaloisError):
    """The canonical map of a bialgebroid is not invertible."""


class InvalidSubring(HopfGaloisError, ValueError):
    pass


class InvalidIdealCoideal(HopfGaloisError, ValueError):
    pass


class CorestFailure(HopfGaloisError):
    pass


class CapExceeded(HopfGaloisError, ValueError):
    pass


class InvariantViolation(HopfGaloisError, AssertionError):
    """A property that must hold by construction failed on concrete data."""


class ParseError(HopfGaloisError, ValueError):
    pass


class AxiomError(HopfGaloisError, ValueError):
    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report
