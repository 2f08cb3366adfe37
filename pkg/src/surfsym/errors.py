"""Exception hierarchy shared by every stage of the pipeline."""


class SymmetryError(Exception):
    """Base class for all engine errors."""


class PreconditionError(SymmetryError):
    """The input surface is outside the class the engine handles."""


class PlaneInput(PreconditionError):
    def __init__(self, msg="input is a plane"):
        super().__init__(msg)


class DegenerateSurface(PreconditionError):
    def __init__(self, msg="parametrization does not define a surface"):
        super().__init__(msg)


class RetriesExhausted(PreconditionError):
    pass


class CentralNotUnique(PreconditionError):
    pass


class VerificationFailed(SymmetryError):
    pass


class EliminationDegenerate(SymmetryError):
    pass


class ZeroWidthRequest(SymmetryError, ValueError):
    pass


class ParseError(SymmetryError, ValueError):
    """Syntax error in a parametrization file; carries line/column."""

    def __init__(self, msg, line=None, col=None):
        self.line = line
        self.col = col
        if line is not None:
            msg = f"line {line}, col {col}: {msg}" if col is not None else f"line {line}: {msg}"
        super().__init__(msg)
