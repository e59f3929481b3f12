"""Exception types raised by the library."""


class HeckeStrataError(ValueError):
    """Base class for every domain error raised here."""


class RankMismatch(HeckeStrataError):
    pass


class NotDominant(HeckeStrataError):
    pass


class NotAntidominant(HeckeStrataError):
    pass


class CompositionMismatch(HeckeStrataError):
    pass


class NotARepresentative(HeckeStrataError):
    pass


class OrderMismatch(HeckeStrataError):
    pass


class NotGeneric(HeckeStrataError):
    pass


class BadParams(HeckeStrataError):
    pass


class BasisExpansionFailure(HeckeStrataError):
    """A product of central elements left a remainder that is not W-invariant."""
