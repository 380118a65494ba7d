"""Exception types shared across the package."""


class MergeError(Exception):
    """Base class for all errors raised by trafficmerge."""


class ValidationError(MergeError, ValueError):
    """Input could not be parsed (bad bit string, bad coin string, bad edge)."""


class DomainError(MergeError, ValueError):
    """Input is well formed but outside the domain of the requested operation."""


class ResourceLimitError(MergeError):
    """Request would exceed a configured enumeration cap."""
