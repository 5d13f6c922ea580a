"""
SPI Waveform Encoder
====================

Renders a register program as the mode-0 line levels an SPI controller
would drive, one sample per system clock cycle. It is the inverse of
``snnchip.spi.peripheral.spi_sample``.

Layout for a non-empty program with divisor d:

    1 idle sample                       CS_n high
    per bit, MSB first:
        ceil(d/2) samples SCLK low      CS_n low, MOSI = bit
        floor(d/2) samples SCLK high    CS_n low, MOSI = bit
    1 sample SCLK low                   CS_n low
    1 idle sample                       CS_n high

An empty program produces no samples, so CS_n never falls.
"""

from typing import Iterable, List

from ..core.regfile import WriteEvent
from .peripheral import FRAME_BITS, IDLE_LINES, SpiLineSample

MIN_SCLK_DIVISOR = 2


def frame_bits(ev: WriteEvent) -> List[bool]:
    """The 16 frame bits of one write, MSB first."""
    word = (ev.addr << 8) | ev.data
    return [bool((word >> bit) & 1) for bit in range(FRAME_BITS - 1, -1, -1)]


def encode_spi_waveform(program: Iterable[WriteEvent], sclk_divisor: int = MIN_SCLK_DIVISOR) -> List[SpiLineSample]:
    """Encode ``program`` as SPI line samples, ``sclk_divisor`` system cycles per SCLK period."""
    if sclk_divisor < MIN_SCLK_DIVISOR:
        raise ValueError(f"sclk_divisor must be >= {MIN_SCLK_DIVISOR}, got {sclk_divisor}")

    writes = list(getattr(program, "writes", program))
    if not writes:
        return []

    high_phase = sclk_divisor // 2
    low_phase = sclk_divisor - high_phase

    samples: List[SpiLineSample] = [IDLE_LINES]
    for ev in writes:
        for bit in frame_bits(ev):
            samples.extend([SpiLineSample(sclk=False, mosi=bit, cs_n=False)] * low_phase)
            samples.extend([SpiLineSample(sclk=True, mosi=bit, cs_n=False)] * high_phase)
    samples.append(SpiLineSample(sclk=False, mosi=False, cs_n=False))
    samples.append(IDLE_LINES)
    return samples
