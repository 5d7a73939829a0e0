"""Exception hierarchy shared by all modules."""

from __future__ import annotations


class PoleStrataError(Exception):
    """Base class for every error raised by this package."""


class MalformedStratum(PoleStrataError, ValueError):
    """Singularity pattern violates the order or degree-sum constraints."""


class MalformedInput(PoleStrataError, ValueError):
    """Structurally ill-formed representation data (not a partition, bad indices...)."""


class UnsupportedK(PoleStrataError):
    """Operation is only defined for a restricted set of differential orders."""


class UnsupportedStratum(PoleStrataError):
    """Stratum lies outside the domain of an operation (e.g. no conical singularity)."""


class WrongGenus(PoleStrataError):
    """Operation requires a specific genus."""


class NotIrreducible(PoleStrataError):
    """A bound that only holds on irreducible strata was requested on a reducible one."""


class NotApplicable(PoleStrataError):
    """A formula was requested outside its stated range of validity."""


class InvalidBeta(PoleStrataError, ValueError):
    """Boundary number smaller than the number of poles."""


class DegenerateVariable(PoleStrataError):
    """A residue variable that must be nonzero vanishes on the whole solution space."""


class SearchCapExceeded(PoleStrataError):
    """A seeded retry loop ran out of attempts."""


class ParseError(PoleStrataError, ValueError):
    """Stratum notation could not be parsed."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class InvalidRepresentation(PoleStrataError):
    """A representation fails the validity conditions required by an operation."""
