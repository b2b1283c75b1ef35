"""Exception hierarchy shared by every module of the package."""


class CompoundMatError(ValueError):
    """Base class for all errors raised by compoundmat."""


class DimensionError(CompoundMatError):
    """Operand shapes are incompatible with the requested operation."""


class OracleSizeError(CompoundMatError):
    """The brute-force permutation oracle was asked for a matrix that is too large."""


class RankError(CompoundMatError):
    """An index, rank position or subset size is out of range."""


class CorankMismatchError(CompoundMatError):
    """A kernel routine was called on a matrix of the wrong corank."""


class SingularError(CompoundMatError):
    """An identity that needs an invertible matrix received a singular one."""


class MembershipError(CompoundMatError):
    """The input does not belong to the group a check is restricted to."""


class DegenerateInputError(CompoundMatError):
    """Input values make the construction meaningless (e.g. a zero entry)."""


class ParseError(CompoundMatError):
    """Text or file input could not be parsed."""
