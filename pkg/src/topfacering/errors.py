"""Exception hierarchy shared by all modules."""

from __future__ import annotations


class FaceRingError(Exception):
    """Base class for every error raised by the library."""


class IndexOutOfRange(FaceRingError, IndexError):
    pass


class DegreeMismatch(FaceRingError, ValueError):
    pass


class LabelNotSubset(FaceRingError, ValueError):
    pass


class NotComparable(FaceRingError, ValueError):
    pass


class InvalidComplex(FaceRingError, ValueError):
    """Raised when an operation needs an axiom that the complex violates."""


class NotFaceElement(FaceRingError, ValueError):
    pass


class SupportViolation(FaceRingError, ValueError):
    pass


class NotInFaceRing(FaceRingError, ValueError):
    """Membership failure; ``face`` and ``support`` locate the first incompatibility."""

    def __init__(self, face: int, support: frozenset[int], message: str = ""):
        self.face = face
        self.support = support
        super().__init__(message or f"incompatible part at face {face}, support {sorted(support)}")


class ShapeMismatch(FaceRingError, ValueError):
    pass


class WrongCharacteristic(FaceRingError, ValueError):
    pass


class NotAcyclic(FaceRingError, ValueError):
    pass


class DuplicateLabelSets(FaceRingError, ValueError):
    pass


class UnknownModel(FaceRingError, KeyError):
    pass


class ParseError(FaceRingError, ValueError):
    """Malformed model or element file. ``where`` names the offending field."""

    def __init__(self, where: str, message: str):
        self.where = where
        super().__init__(f"{where}: {message}")


class ValidationError(FaceRingError, ValueError):
    def __init__(self, report):
        self.report = report
        super().__init__("model failed validation:\n" + report.format())
