"""
Stimulus Files
==============

Per-cycle chip inputs as CSV:

    cycle,i0,i1,i2,sclk,mosi,cs_n,reset
    0,12,0,0,0,0,1,0
    5,0,0,0,0,0,1,0

Cycle numbers must strictly increase. A row holds until the next row, so the
file above drives 12 into layer-1 neuron 0 for cycles 0-4. The SPI and reset
columns may be left out of the header (or left empty in a row); they then
default to idle: sclk=0, mosi=0, cs_n=1, reset=0.
"""

import csv
import io
from typing import Dict, List, Optional, Sequence

from ..chip.top import ChipInputs, IDLE_INPUTS
from ..errors import StimulusParseError
from ..spi.peripheral import SpiLineSample

HEADER = ("cycle", "i0", "i1", "i2", "sclk", "mosi", "cs_n", "reset")
REQUIRED_COLUMNS = ("cycle", "i0", "i1", "i2")
IDLE_DEFAULTS = {"sclk": 0, "mosi": 0, "cs_n": 1, "reset": 0}
_LIMITS = {"i0": 255, "i1": 255, "i2": 255, "sclk": 1, "mosi": 1, "cs_n": 1, "reset": 1}


def _field_value(row: Dict[str, str], name: str, line: int, column: int, source: Optional[str]) -> int:
    raw = (row.get(name) or "").strip()
    if raw == "":
        if name in IDLE_DEFAULTS:
            return IDLE_DEFAULTS[name]
        raise StimulusParseError(f"missing value for '{name}'", line, column, source)
    if not (raw.isascii() and raw.isdigit()):
        raise StimulusParseError(f"'{name}' must be a non-negative integer, got {raw!r}", line, column, source)
    value = int(raw)
    limit = _LIMITS.get(name)
    if limit is not None and value > limit:
        raise StimulusParseError(f"'{name}' value {value} out of range (0..{limit})", line, column, source)
    return value


def parse_stimulus(
    text: str,
    source: Optional[str] = None,
    cycles: Optional[int] = None
) -> List[ChipInputs]:
    """
    Parse stimulus CSV into one ChipInputs per cycle, from cycle 0 through the
    last row's cycle. Cycles before the first row are idle.

    With ``cycles`` set, at most that many entries are produced. Rows past the
    limit are still validated.
    """
    if cycles is not None and cycles < 0:
        raise ValueError(f"cycles must be >= 0, got {cycles}")
    lines = text.splitlines()
    reader = csv.reader(lines)
    try:
        header = [name.strip() for name in next(reader)]
    except StopIteration:
        raise StimulusParseError("empty stimulus, expected a header row", 1, 1, source)

    for column, name in enumerate(header, start=1):
        if name not in HEADER:
            raise StimulusParseError(f"unknown column {name!r}", 1, column, source)
        if header.index(name) != column - 1:
            raise StimulusParseError(f"duplicate column {name!r}", 1, column, source)
    for name in REQUIRED_COLUMNS:
        if name not in header:
            raise StimulusParseError(f"missing required column {name!r}", 1, 1, source)
    columns = {name: k + 1 for k, name in enumerate(header)}

    inputs: List[ChipInputs] = []
    last_cycle = -1
    for row_fields in reader:
        line = reader.line_num
        if not any(f.strip() for f in row_fields):
            continue
        if len(row_fields) != len(header):
            raise StimulusParseError(f"expected {len(header)} fields, got {len(row_fields)}",
                                     line, min(len(row_fields), len(header)) + 1, source)
        row = dict(zip(header, row_fields))
        values = {
            name: _field_value(row, name, line, columns.get(name, 1), source)
            for name in HEADER
        }

        cycle = values["cycle"]
        if cycle <= last_cycle:
            raise StimulusParseError(f"cycle {cycle} does not follow cycle {last_cycle}",
                                     line, columns["cycle"], source)

        last_cycle = cycle
        gap = cycle - len(inputs)
        if cycles is not None:
            gap = min(gap, cycles - len(inputs))
        held = inputs[-1] if inputs else IDLE_INPUTS
        inputs.extend([held] * gap)
        entry = ChipInputs(
            lines=SpiLineSample(
                sclk=bool(values["sclk"]),
                mosi=bool(values["mosi"]),
                cs_n=bool(values["cs_n"])
            ),
            external_currents=(values["i0"], values["i1"], values["i2"]),
            reset=bool(values["reset"])
        )
        if cycles is None or len(inputs) < cycles:
            inputs.append(entry)

    return inputs


def hold_stimulus(inputs: Sequence[ChipInputs], cycles: int) -> List[ChipInputs]:
    """Repeat the last entry until there are ``cycles`` entries (a file's last row holds)."""
    held = list(inputs[:cycles])
    if len(held) < cycles:
        held.extend([held[-1] if held else IDLE_INPUTS] * (cycles - len(held)))
    return held


def _row(cycle: int, inputs: ChipInputs) -> List[int]:
    return [
        cycle,
        *inputs.external_currents,
        int(inputs.lines.sclk),
        int(inputs.lines.mosi),
        int(inputs.lines.cs_n),
        int(inputs.reset),
    ]


def render_stimulus(inputs: Sequence[ChipInputs]) -> str:
    """
    Render inputs as stimulus CSV. A row is written where the inputs change
    and for the final cycle, so parsing gives back the same sequence.
    """
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(HEADER)
    previous = None
    last = len(inputs) - 1
    for cycle, entry in enumerate(inputs):
        if entry != previous or cycle == last:
            writer.writerow(_row(cycle, entry))
            previous = entry
    return buffer.getvalue()
