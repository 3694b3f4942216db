from typing import Optional


class MahoniaException(Exception):
    """Base exception for mahonia errors."""
    pass


class InputError(MahoniaException):
    """
    Exception for malformed or invalid user input.

    Positions are 1-based so that messages line up with the one-line
    notation users type.
    """

    def __init__(self, message: str, position: Optional[int] = None, token: Optional[str] = None):
        self.message = message
        self.position = position
        self.token = token
        super().__init__(self.__str__())

    def __str__(self):
        text = self.message
        if self.position is not None:
            text = f"position {self.position}: {text}"
        if self.token is not None:
            text = f"{text} (token '{self.token}')"
        return text


class ParseError(InputError):
    """Exception for text that is not a valid permutation, word, code or spec."""
    pass


class CodeBoundError(InputError):
    """Exception for vectors outside E_n (0 <= a_i <= i-1)."""
    pass


class GapMismatchError(InputError):
    """Exception for gapped permutations that do not miss exactly their gap."""
    pass


class DomainMismatchError(InputError):
    """Exception for arguments outside an operation's domain."""
    pass


class CapExceededError(MahoniaException):
    """Exception for enumerations larger than the configured caps."""
    pass


class InvariantViolation(MahoniaException):
    """Exception for broken internal invariants."""
    pass


class UsageError(InputError):
    """Exception for unknown flags, missing arguments and bad option values."""
    pass
