"""
SNN Chip
========

Cycle-accurate software model of a small programmable spiking-neuron-array
chip: six 8-bit leaky integrate-and-fire neurons in two layers of three,
nine programmable synaptic weights, one shared parameter set, and a
write-only SPI port that programs it all.

Architecture:
- Core: neuron arithmetic, network step, register file
- SPI: bit-level mode-0 peripheral and waveform encoder
- Chip: one system clock cycle of the whole device, plus the trace recorder
- Oracle: independent equation-level reference for differential checks
- Formats: register programs, stimulus CSV, trace CSV and VCD
- HDL: the same design emitted as Verilog-2005, with a structural lint
"""

# Core model
from .core.neuron import NeuronParams, NeuronState, neuron_reset, neuron_step
from .core.network import NetworkState, WeightMatrix, network_reset, network_step
from .core.regfile import Register, RegisterFile, WriteEvent, regfile_reset, regfile_view, regfile_write

# SPI
from .spi.peripheral import SpiLineSample, SpiSlaveState, spi_reset, spi_sample
from .spi.waveform import encode_spi_waveform

# Oracle
from .oracle.reference import oracle_network_trace, oracle_neuron_trace

# Chip and simulation
from .chip.top import ChipInputs, ChipOutputs, ChipState, chip_reset, chip_step
from .chip.simulation import ProgrammingMode, SimulationConfig, Trace, TraceRecord, run_simulation, summarize_trace

# File formats
from .formats.program import ProgramFile, parse_program, render_program
from .formats.stimulus import hold_stimulus, parse_stimulus, render_stimulus
from .formats.tracefile import read_trace_csv, write_trace_csv, write_trace_vcd

# HDL
from .hdl.emitter import HdlBundle, emit_verilog, write_bundle
from .hdl.lint import LintIssue, lint_verilog

# Verification
from .verify.differential import CheckConfig, CheckReport, run_check

from .errors import FormatParseError, ProgramParseError, SnnChipError, StimulusParseError, TraceParseError

__version__ = "1.0.0"

__all__ = [
    # Core
    "NeuronParams",
    "NeuronState",
    "neuron_reset",
    "neuron_step",
    "NetworkState",
    "WeightMatrix",
    "network_reset",
    "network_step",
    "Register",
    "RegisterFile",
    "WriteEvent",
    "regfile_reset",
    "regfile_view",
    "regfile_write",

    # SPI
    "SpiLineSample",
    "SpiSlaveState",
    "spi_reset",
    "spi_sample",
    "encode_spi_waveform",

    # Oracle
    "oracle_network_trace",
    "oracle_neuron_trace",

    # Chip
    "ChipInputs",
    "ChipOutputs",
    "ChipState",
    "chip_reset",
    "chip_step",
    "ProgrammingMode",
    "SimulationConfig",
    "Trace",
    "TraceRecord",
    "run_simulation",
    "summarize_trace",

    # Formats
    "ProgramFile",
    "parse_program",
    "render_program",
    "hold_stimulus",
    "parse_stimulus",
    "render_stimulus",
    "read_trace_csv",
    "write_trace_csv",
    "write_trace_vcd",

    # HDL
    "HdlBundle",
    "emit_verilog",
    "write_bundle",
    "LintIssue",
    "lint_verilog",

    # Verification
    "CheckConfig",
    "CheckReport",
    "run_check",

    # Errors
    "SnnChipError",
    "FormatParseError",
    "ProgramParseError",
    "StimulusParseError",
    "TraceParseError",
]
