"""Exceptions shared across the package."""


class BoundExceededError(Exception):
    """An enumeration or search was asked to exceed its configured bound."""


class ParseError(ValueError):
    """Invalid endofunction text; carries a 1-indexed source position."""

    def __init__(self, message: str, line: int, column: int) -> None:
        super().__init__(f"{message} (line {line}, column {column})")
        self.reason = message
        self.line = line
        self.column = column
