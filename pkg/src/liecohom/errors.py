"""Exception hierarchy.

Everything a validator can reject derives from :class:`ValidationError`;
malformed text input raises :class:`ParseError`.  The CLI maps the two
families to exit statuses 1 and 2.
"""


class LieCohomError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(LieCohomError):
    pass


class ParseError(LieCohomError):
    def __init__(self, line, reason):
        self.line = line
        self.reason = reason
        super().__init__(f"line {line}: {reason}")


class DimensionMismatch(ValidationError):
    pass


class AntisymmetryViolation(ValidationError):
    def __init__(self, i, j, k):
        self.index = (i, j, k)
        super().__init__(f"c[{i}][{j}][{k}] != -c[{j}][{i}][{k}]")


class JacobiViolation(ValidationError):
    def __init__(self, i, j, l, residual):
        self.index = (i, j, l)
        self.residual = tuple(residual)
        res = " ".join(str(x) for x in self.residual)
        super().__init__(f"Jacobi identity fails on basis triple ({i},{j},{l}); residual {res}")


class NotSubalgebra(ValidationError):
    pass


class NotComplement(ValidationError):
    pass


class NotAdInvariant(ValidationError):
    def __init__(self, message, witness=None):
        self.witness = witness
        super().__init__(message)


class NotAutomorphism(ValidationError):
    def __init__(self, message, index=None):
        self.index = index
        super().__init__(message)


class NoComplement(ValidationError):
    pass


class DegreeOverflow(ValidationError):
    pass


class WrongDegree(ValidationError):
    pass


class DegreeOutOfRange(ValidationError):
    pass


class InvariantsNotPreserved(ValidationError):
    pass


class KNotUnimodular(ValidationError):
    pass


class NotARepresentation(ValidationError):
    pass


class NotCompatible(ValidationError):
    pass


class NotBlockPreserving(ValidationError):
    pass


class NotAGroup(ValidationError):
    pass


class NotASubgroup(ValidationError):
    pass


class NotHyperbolic(ValidationError):
    pass


class NotUnimodularMatrix(ValidationError):
    pass


class UnknownName(ValidationError):
    pass
