"""Exception hierarchy shared by every module."""


class SolidError(ValueError):
    """Base class for domain errors raised by this package."""


class NotPrimeError(SolidError):
    pass


class ParseError(SolidError):
    """Syntax error in a textual form, carrying the offending position."""

    def __init__(self, message: str, text: str = "", pos: int = 0):
        self.message = message
        self.text = text
        self.pos = pos
        super().__init__(f"at position {pos}: {message}")

    def caret(self) -> str:
        """Two-line rendering of the input with a marker under the error."""
        return f"{self.text}\n{' ' * self.pos}^"


class InvalidSolidData(SolidError):
    pass


class TorsionIsWholeRing(SolidError):
    """Raised when torsion invariants are requested for a cyclic ring."""


class RingMismatch(SolidError):
    pass


class EnumerationTooLarge(SolidError):
    pass
