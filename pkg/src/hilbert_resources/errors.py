"""Exception hierarchy shared by every module."""


class ResourceError(Exception):
    """Base class for all errors raised by this package."""


class InvalidSpec(ResourceError, ValueError):
    """A system specification violates its own constraints (e.g. fermi with L > M)."""


class InvalidArgument(ResourceError, ValueError):
    """A scalar argument lies outside the domain of a function."""


class CapExceeded(ResourceError):
    """An enumeration would exceed its configured budget."""


class UnreachableTarget(ResourceError):
    """No parameter value within the search cap reaches the requested dimension."""


class InvalidRegime(ResourceError, ValueError):
    """A growth policy is incompatible with the occupancy constraint L <= M (or L <= K)."""


class SpecParseError(ResourceError, ValueError):
    """A spec document is not well-formed JSON or lacks a ``kind`` field."""


class SpecValidationError(ResourceError, ValueError):
    """A spec document parsed but failed validation."""
