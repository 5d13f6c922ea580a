"""
SPI Peripheral
==============

Mode-0 (CPOL=0, CPHA=0) SPI receiver running in the system clock domain.

The lines are sampled once per system clock; SCLK and CS_n edges are found by
comparing each sample with the previous one, which models the usual
synchronize-then-edge-detect front end. MOSI is shifted in MSB first on each
SCLK rising edge while CS_n is low. Every 16 bits form one write frame:

    bit 15 .. 8   register address
    bit  7 .. 0   data

Several frames may follow each other inside one CS_n low window. Raising CS_n
in the middle of a frame discards the partial frame. MISO is never driven.
"""

from dataclasses import dataclass
from typing import Any, Dict, Optional, Tuple
import logging

from ..core.regfile import WriteEvent

logger = logging.getLogger(__name__)

FRAME_BITS = 16
FRAME_MASK = (1 << FRAME_BITS) - 1


@dataclass(frozen=True)
class SpiLineSample:
    """Levels of the SPI input lines seen at one system clock edge."""
    sclk: bool = False
    mosi: bool = False
    cs_n: bool = True


IDLE_LINES = SpiLineSample()


@dataclass(frozen=True)
class SpiSlaveState:
    """Receiver state: shift register, frame bit counter and previous line levels."""
    shift_reg: int = 0
    bit_count: int = 0
    prev_sclk: bool = False
    prev_cs_n: bool = True
    active: bool = False

    def __post_init__(self):
        if not 0 <= self.bit_count <= FRAME_BITS:
            raise ValueError(f"bit_count must be in [0, {FRAME_BITS}], got {self.bit_count}")
        if not 0 <= self.shift_reg <= FRAME_MASK:
            raise ValueError(f"shift_reg must fit {FRAME_BITS} bits, got {self.shift_reg}")
        if not self.active and self.bit_count != 0:
            raise ValueError("an idle receiver cannot hold a partial frame")

    def to_dict(self) -> Dict[str, Any]:
        return {
            "shift_reg": self.shift_reg,
            "bit_count": self.bit_count,
            "prev_sclk": self.prev_sclk,
            "prev_cs_n": self.prev_cs_n,
            "active": self.active,
        }


def spi_reset() -> SpiSlaveState:
    """Return the idle receiver: no frame in progress, CS_n seen high."""
    return SpiSlaveState()


def spi_sample(
    state: SpiSlaveState,
    lines: SpiLineSample
) -> Tuple[SpiSlaveState, Optional[WriteEvent]]:
    """
    Process one system-clock sample of the SPI lines.

    Must be called exactly once per system clock, with SCLK held at each
    level for at least one sample. Returns the next state and the write
    decoded this cycle, if a frame completed.
    """
    sclk = bool(lines.sclk)
    cs_n = bool(lines.cs_n)

    shift_reg = state.shift_reg
    bit_count = state.bit_count
    active = state.active
    event: Optional[WriteEvent] = None

    if cs_n:
        if active and bit_count > 0:
            logger.debug("spi: CS_n raised after %d bits, partial frame discarded", bit_count)
        active = False
        shift_reg = 0
        bit_count = 0
    else:
        if state.prev_cs_n:
            logger.debug("spi: CS_n asserted, frame start")
            active = True
            shift_reg = 0
            bit_count = 0

        if active and sclk and not state.prev_sclk:
            shift_reg = ((shift_reg << 1) | int(bool(lines.mosi))) & FRAME_MASK
            bit_count += 1
            if bit_count == FRAME_BITS:
                event = WriteEvent(addr=shift_reg >> 8, data=shift_reg & 0xFF)
                logger.debug("spi: frame complete, addr 0x%02X data 0x%02X", event.addr, event.data)
                shift_reg = 0
                bit_count = 0

    new_state = SpiSlaveState(
        shift_reg=shift_reg,
        bit_count=bit_count,
        prev_sclk=sclk,
        prev_cs_n=cs_n,
        active=active
    )
    return new_state, event
