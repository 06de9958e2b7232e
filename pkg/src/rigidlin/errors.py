"""Shared exception types."""


class ParseError(ValueError):
    """A ring, element, matrix or word literal does not match its grammar."""


class UnsupportedRingError(ValueError):
    """The requested operation needs structure the ring does not provide."""


class NotInvertibleError(ValueError):
    """A matrix inverse was requested but the determinant is not a unit."""

    def __init__(self, determinant_text: str):
        super().__init__(
            f"matrix is not invertible: determinant {determinant_text} is not a unit"
        )
        self.determinant_text = determinant_text


class IdentityViolation(RuntimeError):
    """An exact identity that must hold by construction failed.

    Raised by the witness machinery when a verified emission fails its
    defining equation.  It signals a defect in the library (or a broken
    algebraic identity), never a bad input.
    """
