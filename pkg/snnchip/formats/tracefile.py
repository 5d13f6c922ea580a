"""
Trace Files
===========

Writers (and a CSV reader) for recorded simulation traces.

CSV: one row per cycle, columns

    cycle, v1_0..v1_2, v2_0..v2_2, r1_0..r2_2, s1_0..s2_2

where v is the membrane, r the refractory counter and s the spike flag (0/1),
layer 1 before layer 2.

VCD: the same 18 signals under one ``snn`` scope, 1 cycle = 1 ns. Only
values that changed are dumped at each timestamp.
"""

import csv
import io
from typing import Dict, Iterable, List, Optional, Sequence

from vcd import VCDWriter

from ..chip.simulation import Trace, TraceRecord
from ..core.network import LAYER_SIZE
from ..errors import TraceParseError

VCD_SCOPE = "snn"
VCD_TIMESCALE = "1 ns"


def _names(prefix: str) -> List[str]:
    return [f"{prefix}{layer}_{k}" for layer in (1, 2) for k in range(LAYER_SIZE)]


MEMBRANE_COLUMNS = _names("v")
REFRACTORY_COLUMNS = _names("r")
SPIKE_COLUMNS = _names("s")
CSV_HEADER = ["cycle"] + MEMBRANE_COLUMNS + REFRACTORY_COLUMNS + SPIKE_COLUMNS


def _records(trace) -> Iterable[TraceRecord]:
    return trace.records if isinstance(trace, Trace) else trace


def write_trace_csv(trace) -> str:
    """Render a Trace (or a sequence of TraceRecord) as CSV text."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for record in _records(trace):
        writer.writerow(
            [record.cycle, *record.membranes, *record.refractory, *(int(s) for s in record.spikes)]
        )
    return buffer.getvalue()


def read_trace_csv(text: str, source: Optional[str] = None) -> List[TraceRecord]:
    """Parse CSV produced by ``write_trace_csv`` back into records."""
    reader = csv.reader(text.splitlines())
    try:
        header = next(reader)
    except StopIteration:
        raise TraceParseError("empty trace, expected a header row", 1, 1, source)
    if header != CSV_HEADER:
        raise TraceParseError("unexpected trace header", 1, 1, source)

    records: List[TraceRecord] = []
    width = len(MEMBRANE_COLUMNS)
    for row in reader:
        line = reader.line_num
        if len(row) != len(CSV_HEADER):
            raise TraceParseError(f"expected {len(CSV_HEADER)} fields, got {len(row)}", line, 1, source)
        values = []
        for column, field in enumerate(row, start=1):
            if not (field.isascii() and field.isdigit()):
                raise TraceParseError(f"non-numeric field {field!r}", line, column, source)
            values.append(int(field))

        cycle = values[0]
        if records and cycle <= records[-1].cycle:
            raise TraceParseError(f"cycle {cycle} does not follow cycle {records[-1].cycle}", line, 1, source)

        records.append(TraceRecord(
            cycle=cycle,
            membranes=tuple(values[1:1 + width]),
            refractory=tuple(values[1 + width:1 + 2 * width]),
            spikes=tuple(bool(v) for v in values[1 + 2 * width:]),
        ))
    return records


def write_trace_vcd(trace) -> str:
    """Render a Trace (or a sequence of TraceRecord) as a value change dump."""
    buffer = io.StringIO()
    # no $date section: repeated runs must produce identical bytes
    writer = VCDWriter(buffer, timescale=VCD_TIMESCALE, date="")

    variables = {}
    for name in MEMBRANE_COLUMNS + REFRACTORY_COLUMNS:
        variables[name] = writer.register_var(VCD_SCOPE, name, "wire", size=8, init=0)
    for name in SPIKE_COLUMNS:
        variables[name] = writer.register_var(VCD_SCOPE, name, "wire", size=1, init=0)

    current: Dict[str, int] = {name: 0 for name in variables}
    for record in _records(trace):
        values = _record_values(record)
        for name, value in values.items():
            if value != current[name]:
                writer.change(variables[name], record.cycle, value)
                current[name] = value

    writer.close()
    return buffer.getvalue()


def _record_values(record: TraceRecord) -> Dict[str, int]:
    values: Dict[str, int] = {}
    values.update(zip(MEMBRANE_COLUMNS, record.membranes))
    values.update(zip(REFRACTORY_COLUMNS, record.refractory))
    values.update(zip(SPIKE_COLUMNS, (int(s) for s in record.spikes)))
    return values


def records_equal(left: Sequence[TraceRecord], right: Sequence[TraceRecord]) -> bool:
    """Compare neuron values, ignoring cycle numbering (for time-shifted traces)."""
    if len(left) != len(right):
        return False
    return all(
        (a.membranes, a.refractory, a.spikes) == (b.membranes, b.refractory, b.spikes)
        for a, b in zip(left, right)
    )
