"""Exception types shared across the package.

Everything raised on a contract violation derives from AxialError so callers
(and the command line front end) can tell domain failures from bugs. Oracle
failures get their own branch: they mean a constructed object disagrees with
its expected classification data, not that the input was malformed.
"""


class AxialError(Exception):
    pass


class OracleMismatch(AxialError):
    """Constructed object disagrees with its expected classification row."""


class CapExceeded(AxialError):
    pass


class NotThreeTransposition(AxialError):
    pass


class NotInvolution(AxialError):
    pass


class EmptyPerp(AxialError):
    pass


class BadBaseGroup(AxialError):
    pass


class ParseError(AxialError):
    def __init__(self, message, line=None):
        self.line = line
        super().__init__(message if line is None else f"line {line}: {message}")


class InconsistentLine(AxialError):
    pass


class BadParams(AxialError):
    pass


class BadEta(AxialError):
    pass


class WrongEta(AxialError):
    pass


class MissingLabels(AxialError):
    pass


class NotAnIdeal(AxialError):
    def __init__(self, message, witness=None):
        self.witness = witness
        super().__init__(message)


class NotIdempotent(AxialError):
    pass


class NotSemisimple(AxialError):
    pass


class NonScalarNorm(AxialError):
    pass


class NotHermitianResult(AxialError):
    pass


class ReferenceMismatch(AxialError):
    """Recomputed value disagrees with the stored reference table."""
