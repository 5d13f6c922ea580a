"""
File Formats
============

Register program text, stimulus CSV, and trace output (CSV and VCD).
"""

from .program import ProgramFile, parse_literal, parse_program, render_program
from .stimulus import hold_stimulus, parse_stimulus, render_stimulus
from .tracefile import (
    CSV_HEADER, read_trace_csv, records_equal, write_trace_csv, write_trace_vcd
)

__all__ = [
    # Programs
    "ProgramFile",
    "parse_literal",
    "parse_program",
    "render_program",

    # Stimulus
    "hold_stimulus",
    "parse_stimulus",
    "render_stimulus",

    # Traces
    "CSV_HEADER",
    "read_trace_csv",
    "records_equal",
    "write_trace_csv",
    "write_trace_vcd",
]
