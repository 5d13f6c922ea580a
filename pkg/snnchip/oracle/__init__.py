"""
Oracle
======

Equation-level reference model used as ground truth in differential checks.
"""

from .reference import OracleRecord, OracleTrace, oracle_network_trace, oracle_neuron_trace

__all__ = [
    "OracleRecord",
    "OracleTrace",
    "oracle_network_trace",
    "oracle_neuron_trace",
]
