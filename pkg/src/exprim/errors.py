"""Shared exception types."""


class ExprimError(Exception):
    """Base class for all toolkit errors."""


class CapExceeded(ExprimError):
    """An enumeration outgrew its element cap."""


class DimensionTooLarge(ExprimError):
    """A vector-space sweep was requested beyond the supported dimension."""


class ResourceLimit(ExprimError):
    """A bounded search exhausted its budget without certifying either way."""


class FormatError(ExprimError):
    """A data file does not conform to its format."""
