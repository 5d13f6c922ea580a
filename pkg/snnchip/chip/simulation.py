"""
Simulation
==========

Runs the chip over a stimulus and records a per-cycle trace.

A program (a list of register writes) can be applied two ways:

- SPI: encoded as an SPI waveform and played into the chip ahead of the
  stimulus, exactly as a controller on the bench would program it. The trace
  includes those programming cycles.
- DIRECT: written straight into the register file before cycle 0.

Both leave the same register contents, so the network behaves identically
once programming is over; only the time base shifts.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional, Sequence, Tuple
import logging

import numpy as np

from ..core.network import LAYER_SIZE
from ..core.regfile import RegisterFile, WriteEvent, regfile_reset
from ..spi.waveform import MIN_SCLK_DIVISOR, encode_spi_waveform
from .top import ChipInputs, ChipState, IDLE_INPUTS, apply_writes, chip_reset, chip_step

logger = logging.getLogger(__name__)

NEURON_COUNT = 2 * LAYER_SIZE


class ProgrammingMode(Enum):
    """How the register program reaches the chip."""
    SPI = "spi"
    DIRECT = "direct"


@dataclass
class SimulationConfig:
    """Configuration for a simulation run."""
    mode: ProgrammingMode = ProgrammingMode.SPI
    spi_divisor: int = MIN_SCLK_DIVISOR

    def __post_init__(self):
        if self.spi_divisor < MIN_SCLK_DIVISOR:
            raise ValueError(f"spi_divisor must be >= {MIN_SCLK_DIVISOR}, got {self.spi_divisor}")


@dataclass(frozen=True)
class TraceRecord:
    """
    Observable neuron values at the end of one cycle.

    Each tuple lists layer-1 neurons 0..2 then layer-2 neurons 0..2.
    """
    cycle: int
    membranes: Tuple[int, ...]
    refractory: Tuple[int, ...]
    spikes: Tuple[bool, ...]

    @classmethod
    def from_chip(cls, chip: ChipState, cycle: int) -> "TraceRecord":
        neurons = chip.net.neurons
        return cls(
            cycle=cycle,
            membranes=tuple(n.membrane for n in neurons),
            refractory=tuple(n.refractory_count for n in neurons),
            spikes=tuple(n.spiked for n in neurons),
        )


@dataclass
class Trace:
    """Recorded history of one run."""
    records: List[TraceRecord] = field(default_factory=list)
    program_cycles: int = 0
    initial_registers: RegisterFile = field(default_factory=regfile_reset)
    register_changes: List[Tuple[int, RegisterFile]] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.records)

    def __iter__(self):
        return iter(self.records)

    @property
    def final_registers(self) -> RegisterFile:
        if self.register_changes:
            return self.register_changes[-1][1]
        return self.initial_registers

    def after_programming(self) -> List[TraceRecord]:
        return self.records[self.program_cycles:]

    def spike_matrix(self) -> np.ndarray:
        """Boolean array of shape (cycles, 6)."""
        if not self.records:
            return np.zeros((0, NEURON_COUNT), dtype=bool)
        return np.array([r.spikes for r in self.records], dtype=bool)


@dataclass
class TraceSummary:
    """Spike statistics over the post-programming part of a trace."""
    cycles: int
    spike_counts: Tuple[int, ...]
    firing_rates: Tuple[float, ...]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "cycles": self.cycles,
            "spike_counts": list(self.spike_counts),
            "firing_rates": list(self.firing_rates),
        }

    def format(self) -> str:
        lines = [f"cycles: {self.cycles}"]
        for k, (count, rate) in enumerate(zip(self.spike_counts, self.firing_rates)):
            layer, index = divmod(k, LAYER_SIZE)
            lines.append(f"layer{layer + 1}[{index}]: {count} spikes ({rate:.3f}/cycle)")
        return "\n".join(lines)


def summarize_trace(trace: Trace) -> TraceSummary:
    """Spike counts and rates per neuron, ignoring programming cycles."""
    spikes = trace.spike_matrix()[trace.program_cycles:]
    cycles = int(spikes.shape[0])
    counts = spikes.sum(axis=0)
    rates = counts / cycles if cycles else np.zeros(NEURON_COUNT)
    return TraceSummary(
        cycles=cycles,
        spike_counts=tuple(int(c) for c in counts),
        firing_rates=tuple(float(r) for r in rates),
    )


def run_simulation(
    program: Sequence[WriteEvent],
    stimulus: Sequence[ChipInputs],
    cycles: int,
    config: Optional[SimulationConfig] = None
) -> Trace:
    """
    Program the chip, then run ``cycles`` stimulus cycles.

    Stimulus entries beyond ``cycles`` are ignored; missing entries are idle
    inputs. In SPI mode the programming waveform runs first and is part of the
    trace.
    """
    if cycles < 0:
        raise ValueError(f"cycles must be >= 0, got {cycles}")
    config = config or SimulationConfig()

    writes = list(getattr(program, "writes", program))
    stimulus = list(stimulus)
    for k, inputs in enumerate(stimulus[:cycles]):
        if not isinstance(inputs, ChipInputs):
            raise TypeError(f"stimulus[{k}] is {type(inputs).__name__}, expected ChipInputs")
    if len(stimulus) < cycles:
        logger.warning("stimulus covers %d of %d cycles, padding with idle inputs", len(stimulus), cycles)
        stimulus.extend([IDLE_INPUTS] * (cycles - len(stimulus)))
    stimulus = stimulus[:cycles]

    chip = chip_reset()
    prelude: List[ChipInputs] = []
    if config.mode == ProgrammingMode.DIRECT:
        chip = ChipState(rf=apply_writes(chip.rf, writes))
    else:
        prelude = [ChipInputs(lines=lines) for lines in encode_spi_waveform(writes, config.spi_divisor)]

    trace = Trace(program_cycles=len(prelude), initial_registers=chip.rf)
    logger.info("simulating %d cycles (%s programming, %d writes, %d programming cycles)",
                cycles, config.mode.value, len(writes), len(prelude))

    for cycle, inputs in enumerate(prelude + stimulus):
        previous_rf = chip.rf
        chip, _ = chip_step(chip, inputs)
        if chip.rf != previous_rf:
            trace.register_changes.append((cycle, chip.rf))
        trace.records.append(TraceRecord.from_chip(chip, cycle))

    if logger.isEnabledFor(logging.DEBUG):
        logger.debug("final state: %s", chip.to_dict())
    summary = summarize_trace(trace)
    logger.info("simulation finished: %d cycles, spike counts %s", len(trace), list(summary.spike_counts))
    return trace
