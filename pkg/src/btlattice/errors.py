"""Exceptions raised by the library.

Every error derives from `BTLatticeError`, and the input errors also
derive from `ValueError`, so callers that only care about bad input
can catch that.
"""


class BTLatticeError(Exception):
    """Base class of all errors raised by this package."""


class InvalidInput(BTLatticeError, ValueError):
    """Malformed or out-of-domain input."""


class NoNonzeroEntry(InvalidInput):
    """A cyclic class with no nonzero entry has no pairs encoding."""


class NoValidMatrix(InvalidInput):
    """No rotation of a class unflattens to a matrix with positive columns."""


class FrameMismatch(InvalidInput):
    """Two objects live in incompatible coordinate frames."""


class InvalidDegree(InvalidInput):
    """The unramified degree does not divide the index of D."""


class NotIntegral(InvalidInput):
    """A scaled local type has a non-integral entry."""


class InconsistentData(InvalidInput):
    """Known offset differences do not satisfy the cocycle condition."""


class InvalidGrid(InvalidInput):
    """The enumeration grid is too coarse for the data."""
