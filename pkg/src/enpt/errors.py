"""Exception hierarchy shared by all modules."""


class EnptError(Exception):
    """Base class for every error raised by this package."""


class MalformedInputError(EnptError, ValueError):
    pass


class NotUnionableError(EnptError):
    """Two paths cannot be merged: they are parallel or splitting."""


class CycleUnionError(NotUnionableError):
    pass


class IllegalMinifyError(EnptError):
    pass


class ContractibilityError(EnptError):
    pass


class DegenerateTreeError(MalformedInputError):
    pass


class ResourceLimitError(EnptError):
    pass


class InvariantViolation(EnptError, AssertionError):
    """A checked structural property or internal invariant failed on concrete data."""
