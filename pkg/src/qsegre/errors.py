"""Exception types shared across the package.

Every error raised by qsegre derives from :class:`QsegreError` so callers can
catch the whole family at once.  Construction and input-format problems carry a
message naming the offending field.
"""


class QsegreError(Exception):
    """Base class for all qsegre errors."""


class DimensionMismatch(QsegreError):
    """Amplitude count, vector length, or mode dimension is inconsistent."""


class ZeroVector(QsegreError):
    """An all-zero amplitude vector was supplied where a projective point is required."""


class NonFinite(QsegreError):
    """A NaN or infinite amplitude was supplied to the float backend."""


class IndexOutOfRange(QsegreError):
    """A mode index or multi-index lies outside the declared dimensions."""


class NotProduct(QsegreError):
    """State is not a product state within the requested tolerance."""


class TooLarge(QsegreError):
    """Requested enumeration exceeds the configured size cap."""


class WrongShape(QsegreError):
    """State shape does not match what the operation requires."""


class ShapeError(QsegreError):
    """Matrix shape is invalid for the requested minor computation."""


class MissingVariable(QsegreError):
    """Polynomial evaluation was given an assignment missing a variable."""


class MalformedInput(QsegreError):
    """A JSON document or CLI argument failed validation; message names the field."""
