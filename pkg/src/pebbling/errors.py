"""Shared exception types."""


class PebblingError(Exception):
    """Base class for domain errors raised by this package."""


class SearchCapExceeded(PebblingError):
    """A bounded search ran past its configured size or node cap."""
