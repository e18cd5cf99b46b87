"""Exception hierarchy shared by every grouplab module."""

from __future__ import annotations


class GroupLabError(Exception):
    """Base class for all grouplab errors."""


class BudgetExceeded(GroupLabError):
    """A closure or enumeration grew past its configured budget."""


class InvalidBackend(GroupLabError):
    """Construction-time validation of a backend failed."""


class InvalidAction(InvalidBackend):
    """A semidirect action matrix is not a usable automorphism."""


class ParseError(GroupLabError):
    """Malformed group expression; carries the offending column."""

    def __init__(self, message: str, position: int, text: str = ""):
        self.position = position
        self.text = text
        super().__init__(f"{message} at position {position}")

    def pointer(self) -> str:
        return f"{self.text}\n{' ' * self.position}^"


class ParameterRangeError(ParseError):
    """A family parameter is outside its allowed range."""


class NotNormal(GroupLabError):
    pass


class PrimeDoesNotDivide(GroupLabError):
    pass


class TooLarge(GroupLabError):
    pass


class TrivialGroup(GroupLabError):
    pass
