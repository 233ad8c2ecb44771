"""Exception types raised across the package."""

from __future__ import annotations


class SandhiError(Exception):
    """Base class for all errors raised by this package."""


class UnknownCharacter(SandhiError, ValueError):
    def __init__(self, text: str, position: int) -> None:
        self.text = text
        self.position = position
        char = text[position]
        super().__init__(
            f"unknown character {char!r} (U+{ord(char):04X}) at position {position} in {text!r}"
        )


class IndexOutOfRange(SandhiError, IndexError):
    def __init__(self, category: int, index: int) -> None:
        self.category = category
        self.index = index
        super().__init__(f"category {category} has no entry at index {index}")


class AmbiguousSublist(SandhiError, ValueError):
    """A sublist entry was decoded without naming which member is meant."""

    def __init__(self, category: int, index: int) -> None:
        self.category = category
        self.index = index
        super().__init__(
            f"entry {index} of category {category} is a sublist; "
            "decoding it needs the originating letter"
        )


class EmptyWord(SandhiError, ValueError):
    def __init__(self, what: str = "word") -> None:
        super().__init__(f"{what} must not be empty")


class InvalidUtf8(SandhiError, ValueError):
    def __init__(self, offset: int, source: str | None = None) -> None:
        self.offset = offset
        self.source = source
        where = f" in {source}" if source else ""
        super().__init__(f"invalid UTF-8 at byte offset {offset}{where}")


class UnmappedCodePoint(SandhiError, ValueError):
    def __init__(self, char: str, offset: int) -> None:
        self.char = char
        self.offset = offset
        super().__init__(
            f"no IAST mapping for U+{ord(char):04X} at code point offset {offset}"
        )


class EmptyPatternSet(SandhiError, ValueError):
    def __init__(self) -> None:
        super().__init__("at least one non-empty pattern is required")
