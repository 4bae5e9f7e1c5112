"""Exception hierarchy shared across the package."""

from __future__ import annotations


class InvalidGraphError(ValueError):
    """The input does not describe a valid connected rotation system."""


class RotationParseError(InvalidGraphError):
    """The rotation-system text file is malformed."""


class UnsupportedError(RuntimeError):
    """The operation is not defined for this input (e.g. wrong genus)."""


class EdgeCapError(RuntimeError):
    """An enumeration was refused because the edge count exceeds the cap."""


class InternalInvariantError(RuntimeError):
    """A mathematical identity that must hold was violated; indicates a bug."""
