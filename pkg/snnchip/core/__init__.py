"""
Core Model
==========

The cycle-accurate arithmetic of the chip: the 8-bit LIF neuron, the
two-layer network and the register file that programs them.
"""

from .neuron import (
    BYTE_MAX, NeuronParams, NeuronState, RESET_STATE,
    check_byte, neuron_reset, neuron_step, saturating_integrate
)
from .network import (
    LAYER_SIZE, NetworkState, WeightMatrix,
    compute_layer2_currents, network_reset, network_step
)
from .regfile import (
    REGISTER_COUNT, Register, RegisterFile, WriteEvent,
    register_map, regfile_reset, regfile_view, regfile_write, weight_address
)

__all__ = [
    # Neuron
    "BYTE_MAX",
    "NeuronParams",
    "NeuronState",
    "RESET_STATE",
    "check_byte",
    "neuron_reset",
    "neuron_step",
    "saturating_integrate",

    # Network
    "LAYER_SIZE",
    "NetworkState",
    "WeightMatrix",
    "compute_layer2_currents",
    "network_reset",
    "network_step",

    # Register file
    "REGISTER_COUNT",
    "Register",
    "RegisterFile",
    "WriteEvent",
    "register_map",
    "regfile_reset",
    "regfile_view",
    "regfile_write",
    "weight_address",
]
