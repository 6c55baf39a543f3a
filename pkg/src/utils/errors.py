"""Exception hierarchy shared by every verification module."""


class VerificationError(Exception):
    """Base class for everything a check can fail with."""


class DimensionMismatchError(VerificationError):
    pass


class ZeroNormRootError(VerificationError):
    pass


class NonIntegralReflectionError(VerificationError):
    pass


class KernelDimensionError(VerificationError):
    def __init__(self, dimension: int, message: str = ""):
        self.dimension = dimension
        super().__init__(message or f"kernel has dimension {dimension}, expected 1")


class UnsupportedParameterError(VerificationError):
    pass


class GramRelationError(VerificationError):
    pass


class NonTerminationError(VerificationError):
    pass


class NotBijectiveError(VerificationError):
    pass


class GroupAutomorphismError(VerificationError):
    pass


class EisensteinDivisionError(VerificationError, ZeroDivisionError):
    pass


class LatticeStructureError(VerificationError):
    pass


class UnknownSuiteError(VerificationError):
    pass
