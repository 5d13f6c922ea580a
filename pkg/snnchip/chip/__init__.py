"""
Chip
====

The whole device (SPI, register file, network) stepped one system clock
at a time, and the simulation runner that records traces.
"""

from .top import (
    ChipInputs, ChipOutputs, ChipState, IDLE_INPUTS,
    apply_writes, chip_reset, chip_step
)
from .simulation import (
    NEURON_COUNT, ProgrammingMode, SimulationConfig,
    Trace, TraceRecord, TraceSummary, run_simulation, summarize_trace
)

__all__ = [
    # Device
    "ChipInputs",
    "ChipOutputs",
    "ChipState",
    "IDLE_INPUTS",
    "apply_writes",
    "chip_reset",
    "chip_step",

    # Simulation
    "NEURON_COUNT",
    "ProgrammingMode",
    "SimulationConfig",
    "Trace",
    "TraceRecord",
    "TraceSummary",
    "run_simulation",
    "summarize_trace",
]
