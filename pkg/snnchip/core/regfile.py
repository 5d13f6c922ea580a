"""
Register File
=============

The byte-wide register file that stores every programmable value on the
chip: nine synaptic weights and one parameter set shared by both layers.

Register map (write-only, one byte per address):

    0x00 - 0x08   weights, address = i*3 + j for w[i][j]
    0x09          threshold
    0x0A          leak
    0x0B          refractory period

Writes to 0x0C and above are ignored.
"""

from dataclasses import dataclass
from enum import IntEnum
from typing import Any, Dict, List, Tuple
import logging

from .neuron import NeuronParams, check_byte
from .network import LAYER_SIZE, WeightMatrix

logger = logging.getLogger(__name__)


class Register(IntEnum):
    """Normative register addresses."""
    W_0_0 = 0x00
    W_0_1 = 0x01
    W_0_2 = 0x02
    W_1_0 = 0x03
    W_1_1 = 0x04
    W_1_2 = 0x05
    W_2_0 = 0x06
    W_2_1 = 0x07
    W_2_2 = 0x08
    THRESHOLD = 0x09
    LEAK = 0x0A
    REFRACTORY_PERIOD = 0x0B

    @property
    def label(self) -> str:
        """Lower-case name used in register map listings and emitted HDL."""
        return self.name.lower()


REGISTER_COUNT = len(Register)
WEIGHT_COUNT = LAYER_SIZE * LAYER_SIZE


def weight_address(i: int, j: int) -> int:
    """Address of w[i][j] (destination i in layer 2, source j in layer 1)."""
    return i * LAYER_SIZE + j


def register_map() -> List[Tuple[int, str]]:
    """The register map as ``(address, label)`` pairs in address order."""
    return [(reg.value, reg.label) for reg in Register]


@dataclass(frozen=True)
class WriteEvent:
    """One decoded register write (the SPI to register file handoff)."""
    addr: int
    data: int

    def __post_init__(self):
        check_byte("addr", self.addr)
        check_byte("data", self.data)

    @property
    def is_mapped(self) -> bool:
        return self.addr < REGISTER_COUNT

    def to_dict(self) -> Dict[str, Any]:
        return {"addr": self.addr, "data": self.data}


@dataclass(frozen=True)
class RegisterFile:
    """Twelve byte-wide registers, addressed 0x00 through 0x0B."""
    regs: Tuple[int, ...] = (0,) * REGISTER_COUNT

    def __post_init__(self):
        regs = tuple(self.regs)
        if len(regs) != REGISTER_COUNT:
            raise ValueError(f"register file holds {REGISTER_COUNT} registers, got {len(regs)}")
        for addr, value in enumerate(regs):
            check_byte(f"regs[0x{addr:02X}]", value)
        object.__setattr__(self, "regs", regs)

    def __getitem__(self, reg: int) -> int:
        return self.regs[reg]

    def to_dict(self) -> Dict[str, Any]:
        return {Register(addr).label: value for addr, value in enumerate(self.regs)}


def regfile_reset() -> RegisterFile:
    """Return a register file with every register cleared."""
    return RegisterFile()


def regfile_write(rf: RegisterFile, ev: WriteEvent) -> RegisterFile:
    """
    Commit one write.

    An address outside the map leaves the file unchanged (the same object is
    returned) and logs an "ignored write" warning; the hardware has no error
    channel to report it on.
    """
    if not ev.is_mapped:
        logger.warning("ignored write: address 0x%02X is outside the register map (data 0x%02X)",
                       ev.addr, ev.data)
        return rf

    regs = list(rf.regs)
    regs[ev.addr] = ev.data
    logger.debug("register 0x%02X (%s) <= 0x%02X", ev.addr, Register(ev.addr).label, ev.data)
    return RegisterFile(tuple(regs))


def regfile_view(rf: RegisterFile) -> Tuple[WeightMatrix, NeuronParams]:
    """Decode the register file into the network's weights and parameters."""
    weights = WeightMatrix.from_flat(rf.regs[:WEIGHT_COUNT])
    params = NeuronParams(
        threshold=rf.regs[Register.THRESHOLD],
        leak=rf.regs[Register.LEAK],
        refractory_period=rf.regs[Register.REFRACTORY_PERIOD]
    )
    return weights, params
