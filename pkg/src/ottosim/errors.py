"""Exception and warning types raised by the library."""


class OttoSimError(ValueError):
    """Base class for all validation errors."""


class NotHermitian(OttoSimError):
    """Matrix is not Hermitian within tolerance."""


class NotTracePreserving(OttoSimError):
    """Kraus operators do not sum to the identity map."""


class DimensionMismatch(OttoSimError):
    """Operands have incompatible dimensions."""


class LengthMismatch(OttoSimError):
    """Paired sequences have different lengths."""


class DimensionTooLarge(OttoSimError):
    """Brute-force enumeration refused above its size cap."""


class InvalidField(OttoSimError):
    """Adiabatic field or cycle parameter out of range."""


class NonUnitVector(OttoSimError):
    """Spin direction is not normalized."""


class NotAnEngine(OttoSimError):
    """Requested quantity is only defined in engine mode (W < 0, Qh > 0)."""


class MeasurementCoolsWarning(UserWarning):
    """A measurement stroke removed energy (Qh < 0); channel is not unital."""
