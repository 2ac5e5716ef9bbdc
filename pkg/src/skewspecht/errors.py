"""Exception types shared across the engine."""


class DomainError(ValueError):
    """An input lies outside the domain of an operation."""


class ParseError(DomainError):
    """A CLI/JSON string could not be parsed.

    ``position`` is the 0-based character offset where parsing failed.
    """

    def __init__(self, message: str, text: str = "", position: int = 0):
        self.reason = message
        self.text = text
        self.position = position
        if text:
            message = f"{message} at position {position}: {text!r}"
        super().__init__(message)
