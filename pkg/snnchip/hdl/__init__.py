"""
HDL Emission
============

Renders the chip as synthesizable Verilog-2005, one module per file:

- lif_neuron.v: one LIF neuron
- snn_network.v: register file and the 2x3 network
- spi_peripheral.v: mode-0 SPI write port
- snn_top.v: top level

plus a structural lint for the emitted text.
"""

from .emitter import HdlBundle, emit_verilog, write_bundle
from .lint import LintIssue, lint_verilog, strip_comments
from .network import register_map_comment

__all__ = [
    # Emission
    "HdlBundle",
    "emit_verilog",
    "write_bundle",
    "register_map_comment",

    # Lint
    "LintIssue",
    "lint_verilog",
    "strip_comments",
]
