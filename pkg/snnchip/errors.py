"""
Errors
======

Exception types raised by the file-format parsers and the command line.

The simulated hardware itself never raises: bad register addresses and
malformed SPI frames are logged and dropped, as the chip would drop them.
"""

from typing import Optional


class SnnChipError(Exception):
    """Base class for all snnchip errors."""


class FormatParseError(SnnChipError, ValueError):
    """A text input (program, stimulus or trace) could not be parsed."""

    def __init__(
        self,
        message: str,
        line: int,
        column: int = 1,
        source: Optional[str] = None
    ):
        self.message = message
        self.line = line
        self.column = column
        self.source = source or "<input>"
        super().__init__(f"{self.source}:{line}:{column}: {message}")


class ProgramParseError(FormatParseError):
    """Malformed register program file."""


class StimulusParseError(FormatParseError):
    """Malformed stimulus CSV."""


class TraceParseError(FormatParseError):
    """Malformed trace CSV."""
