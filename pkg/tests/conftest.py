"""Shared helpers for the snnchip test suite."""

from pathlib import Path
from typing import Iterable, List

import numpy as np
import pytest

from snnchip.core.network import LAYER_SIZE
from snnchip.core.regfile import Register, WriteEvent, weight_address
from snnchip.spi.peripheral import SpiLineSample, spi_reset, spi_sample

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240611)


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES


def decode_waveform(samples: Iterable[SpiLineSample]) -> List[WriteEvent]:
    """Replay line samples through the SPI receiver and collect the writes."""
    state = spi_reset()
    events = []
    for lines in samples:
        state, event = spi_sample(state, lines)
        if event is not None:
            events.append(event)
    return events


def scenario_program(threshold: int = 10, leak: int = 1, refractory_period: int = 2,
                     diagonal: int = 255) -> List[WriteEvent]:
    """Parameters plus a diagonal (identity times ``diagonal``) weight matrix."""
    writes = [
        WriteEvent(int(Register.THRESHOLD), threshold),
        WriteEvent(int(Register.LEAK), leak),
        WriteEvent(int(Register.REFRACTORY_PERIOD), refractory_period),
    ]
    writes += [WriteEvent(weight_address(k, k), diagonal) for k in range(LAYER_SIZE)]
    return writes


def random_program(rng: np.random.Generator, max_writes: int = 64, max_addr: int = 0x0F) -> List[WriteEvent]:
    count = int(rng.integers(1, max_writes + 1))
    addrs = rng.integers(0, max_addr + 1, size=count)
    data = rng.integers(0, 256, size=count)
    return [WriteEvent(int(a), int(d)) for a, d in zip(addrs, data)]
