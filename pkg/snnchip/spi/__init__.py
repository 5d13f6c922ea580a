"""
SPI
===

The mode-0 write-only SPI peripheral and the matching waveform encoder.
"""

from .peripheral import FRAME_BITS, IDLE_LINES, SpiLineSample, SpiSlaveState, spi_reset, spi_sample
from .waveform import MIN_SCLK_DIVISOR, encode_spi_waveform, frame_bits

__all__ = [
    "FRAME_BITS",
    "IDLE_LINES",
    "MIN_SCLK_DIVISOR",
    "SpiLineSample",
    "SpiSlaveState",
    "encode_spi_waveform",
    "frame_bits",
    "spi_reset",
    "spi_sample",
]
