"""Exception hierarchy shared by every module."""


class ArcModelError(ValueError):
    """Base class for domain errors raised by :mod:`arcmodel`."""


class InvalidArc(ArcModelError):
    pass


class DegenerateArc(InvalidArc):
    """Raised for a pair ``(a, a)``, which stands for the zero object."""


class NoMorphism(ArcModelError):
    pass


class NoExtension(ArcModelError):
    pass


class NotSaturated(ArcModelError):
    pass


class OverlappingBlocks(ArcModelError):
    pass


class NotNoncrossing(ArcModelError):
    pass


class EmptySet(ArcModelError):
    pass


class NotMinimal(ArcModelError):
    pass


class ResourceLimit(ArcModelError):
    pass


class WindowTooSmall(ArcModelError):
    pass


class ParseError(ArcModelError):
    """Malformed textual or JSON input."""
