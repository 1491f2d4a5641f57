"""Shared exception types."""


class IngestionError(ValueError):
    """A resource file could not be parsed; message names the line."""


class StoreFormatError(ValueError):
    """A serialized knowledge store is corrupt or has the wrong version."""
