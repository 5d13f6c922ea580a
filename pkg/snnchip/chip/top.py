"""
Chip Top
========

The whole device for one system clock cycle: the SPI peripheral feeds the
register file, and the register file drives the network.

Within a cycle:
  1. the SPI lines are sampled
  2. a write decoded this cycle is committed to the register file
  3. the network steps with the register contents from the START of the cycle

so a write becomes visible to the neurons on the following cycle. Reset is
synchronous and overrides everything else.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, Sequence, Tuple
import logging

from ..core.neuron import check_byte
from ..core.network import LAYER_SIZE, NO_SPIKES, NetworkState, Spikes, network_reset, network_step
from ..core.regfile import RegisterFile, WriteEvent, regfile_reset, regfile_view, regfile_write
from ..spi.peripheral import IDLE_LINES, SpiLineSample, SpiSlaveState, spi_reset, spi_sample

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ChipInputs:
    """Pin levels applied during one system clock cycle."""
    lines: SpiLineSample = IDLE_LINES
    external_currents: Tuple[int, ...] = (0, 0, 0)
    reset: bool = False

    def __post_init__(self):
        currents = tuple(self.external_currents)
        if len(currents) != LAYER_SIZE:
            raise ValueError(f"expected {LAYER_SIZE} external currents, got {len(currents)}")
        for k, value in enumerate(currents):
            check_byte(f"external_currents[{k}]", value)
        object.__setattr__(self, "external_currents", currents)


IDLE_INPUTS = ChipInputs()


@dataclass(frozen=True)
class ChipOutputs:
    """Spike outputs of the cycle just completed."""
    layer1_spikes: Spikes = NO_SPIKES
    layer2_spikes: Spikes = NO_SPIKES


@dataclass(frozen=True)
class ChipState:
    """Complete device state plus the simulator's cycle counter."""
    spi: SpiSlaveState = field(default_factory=spi_reset)
    rf: RegisterFile = field(default_factory=regfile_reset)
    net: NetworkState = field(default_factory=network_reset)
    cycle: int = 0

    def to_dict(self) -> Dict[str, Any]:
        return {
            "cycle": self.cycle,
            "spi": self.spi.to_dict(),
            "registers": self.rf.to_dict(),
            "network": self.net.to_dict(),
        }


def chip_reset() -> ChipState:
    """Return the device right after a global reset."""
    return ChipState()


def chip_step(
    chip: ChipState,
    inputs: ChipInputs
) -> Tuple[ChipState, ChipOutputs]:
    """Advance the device by one system clock cycle."""
    if inputs.reset:
        logger.debug("cycle %d: reset asserted", chip.cycle)
        return ChipState(cycle=chip.cycle + 1), ChipOutputs()

    spi, event = spi_sample(chip.spi, inputs.lines)

    weights, params = regfile_view(chip.rf)
    rf = regfile_write(chip.rf, event) if event is not None else chip.rf

    net, layer1_spikes, layer2_spikes = network_step(
        chip.net, weights, params, inputs.external_currents
    )

    new_chip = ChipState(spi=spi, rf=rf, net=net, cycle=chip.cycle + 1)
    return new_chip, ChipOutputs(layer1_spikes, layer2_spikes)


def apply_writes(rf: RegisterFile, writes: Sequence[WriteEvent]) -> RegisterFile:
    """Commit writes in order, as direct programming does before cycle 0."""
    for ev in writes:
        rf = regfile_write(rf, ev)
    return rf
