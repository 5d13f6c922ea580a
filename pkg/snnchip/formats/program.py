"""
Program Files
=============

Text files listing register writes, one directive per line:

    # set threshold, then the diagonal weights
    write 0x09 10
    write 0x00 0xFF

Literals are decimal or ``0x``-prefixed hex and must fit one byte. ``#``
starts a comment that runs to the end of the line. Writes keep file order.
"""

from dataclasses import dataclass, field
from typing import Iterator, List, Optional, Tuple
import re

from ..core.regfile import Register, WriteEvent
from ..errors import ProgramParseError

DIRECTIVE = "write"

_TOKEN = re.compile(r"\S+")
_HEX = re.compile(r"0[xX][0-9a-fA-F]+")
_DEC = re.compile(r"[0-9]+")


@dataclass
class ProgramFile:
    """Ordered register writes."""
    writes: List[WriteEvent] = field(default_factory=list)

    def __iter__(self) -> Iterator[WriteEvent]:
        return iter(self.writes)

    def __len__(self) -> int:
        return len(self.writes)


def parse_literal(token: str) -> Optional[int]:
    """Value of a decimal or 0x-hex literal, or None when it is neither."""
    if _HEX.fullmatch(token):
        return int(token, 16)
    if _DEC.fullmatch(token):
        return int(token, 10)
    return None


def _tokens(line: str) -> List[Tuple[int, str]]:
    body = line.split("#", 1)[0]
    return [(m.start() + 1, m.group()) for m in _TOKEN.finditer(body)]


def parse_program(text: str, source: Optional[str] = None) -> ProgramFile:
    """Parse program text; errors name the 1-based line and column."""
    program = ProgramFile()

    for line_no, line in enumerate(text.splitlines(), start=1):
        tokens = _tokens(line)
        if not tokens:
            continue

        column, keyword = tokens[0]
        if keyword != DIRECTIVE:
            raise ProgramParseError(f"unknown directive {keyword!r}, expected '{DIRECTIVE}'",
                                    line_no, column, source)
        if len(tokens) != 3:
            where = tokens[3][0] if len(tokens) > 3 else len(line.split("#", 1)[0].rstrip()) + 1
            raise ProgramParseError(f"'{DIRECTIVE}' takes exactly 2 operands (address, data), got {len(tokens) - 1}",
                                    line_no, where, source)

        values = []
        for (column, token), role in zip(tokens[1:], ("address", "data")):
            value = parse_literal(token)
            if value is None:
                raise ProgramParseError(f"invalid {role} literal {token!r}", line_no, column, source)
            if value > 0xFF:
                raise ProgramParseError(f"{role} {token} out of range (0..255)", line_no, column, source)
            values.append(value)

        program.writes.append(WriteEvent(addr=values[0], data=values[1]))

    return program


def render_program(program) -> str:
    """Render writes as program text that ``parse_program`` reads back unchanged."""
    lines = ["# snnchip register program"]
    for ev in getattr(program, "writes", program):
        comment = f"  # {Register(ev.addr).label}" if ev.is_mapped else ""
        lines.append(f"{DIRECTIVE} 0x{ev.addr:02X} 0x{ev.data:02X}{comment}")
    return "\n".join(lines) + "\n"
