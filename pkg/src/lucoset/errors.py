"""Exception taxonomy shared by all modules."""


class LucosetError(ValueError):
    """Base class for all validation errors raised by this package."""


class NotSquareError(LucosetError):
    """Matrix is not square."""


class NotHermitianError(LucosetError):
    """Matrix deviates from its conjugate transpose beyond tolerance."""


class NotUnitaryError(LucosetError):
    """Matrix deviates from unitarity beyond tolerance."""


class InvalidDensityError(LucosetError):
    """Matrix violates a density-matrix invariant (hermiticity, trace, positivity)."""


class DimensionMismatchError(LucosetError):
    """Operand shapes or declared factor dimensions are inconsistent."""


class ValueCountMismatchError(LucosetError):
    """Number of replacement eigenvalues does not match the number of distinct ones."""


class NotADistributionError(LucosetError):
    """Replacement eigenvalues are not an admissible descending distribution."""


class OutOfTriangleError(LucosetError):
    """Werner parameters lie outside the admissible (e, f) triangle."""


class OutOfRangeError(LucosetError):
    """Integer argument outside the supported range."""


class NotAPartitionError(LucosetError):
    """Sequence is not a partition of the stated integer."""


class MatrixFileError(LucosetError):
    """Matrix file failed to parse or violates the file schema."""
