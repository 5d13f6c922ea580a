"""
Differential Check
==================

Runs random episodes through both the cycle-accurate network model and the
reference oracle and compares them cycle by cycle: every membrane, spike and
refractory counter of all six neurons.

Episodes are reproducible from one integer seed. Each episode draws from its
own child of ``numpy.random.SeedSequence(seed)``, so the outcome does not
depend on which worker thread ran it, or in what order.
"""

from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple
import logging
import time

import numpy as np

from ..core.network import LAYER_SIZE, WeightMatrix, network_reset, network_step
from ..core.neuron import BYTE_MAX, NeuronParams
from ..oracle.reference import oracle_network_trace

logger = logging.getLogger(__name__)

NEURON_NAMES = tuple(f"l{layer}_{k}" for layer in (1, 2) for k in range(LAYER_SIZE))

# Leak and refractory ranges are narrowed so most episodes actually spike.
MAX_RANDOM_LEAK = 63
MAX_RANDOM_REFRACTORY = 15


@dataclass
class CheckConfig:
    """Configuration for a differential check run."""
    episodes: int = 1000
    seed: int = 0
    cycles_per_episode: int = 200
    parallel_processing: bool = True
    max_workers: Optional[int] = None

    def __post_init__(self):
        if self.episodes < 0:
            raise ValueError(f"episodes must be >= 0, got {self.episodes}")
        if self.cycles_per_episode < 0:
            raise ValueError(f"cycles_per_episode must be >= 0, got {self.cycles_per_episode}")
        if self.seed < 0:
            raise ValueError(f"seed must be >= 0, got {self.seed}")


@dataclass(frozen=True)
class Episode:
    """One random network configuration and its external current stimulus."""
    index: int
    weights: WeightMatrix
    params: NeuronParams
    currents: Tuple[Tuple[int, ...], ...]


@dataclass(frozen=True)
class Divergence:
    """First point where model and oracle disagree."""
    episode: int
    cycle: int
    field: str
    model: Any
    oracle: Any

    def to_dict(self) -> Dict[str, Any]:
        return {
            "episode": self.episode,
            "cycle": self.cycle,
            "field": self.field,
            "model": self.model,
            "oracle": self.oracle,
        }

    def format(self) -> str:
        return (f"episode {self.episode}, cycle {self.cycle}: {self.field} "
                f"model={self.model} oracle={self.oracle}")


@dataclass
class CheckReport:
    """Outcome of a differential check."""
    episodes: int
    cycles_per_episode: int
    seed: int
    mismatches: int = 0
    first_divergence: Optional[Divergence] = None
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return self.mismatches == 0

    def to_dict(self) -> Dict[str, Any]:
        return {
            "episodes": self.episodes,
            "cycles_per_episode": self.cycles_per_episode,
            "seed": self.seed,
            "mismatches": self.mismatches,
            "first_divergence": self.first_divergence.to_dict() if self.first_divergence else None,
            "elapsed": self.elapsed,
        }

    def format(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        lines = [f"{status}: {self.episodes} episodes x {self.cycles_per_episode} cycles "
                 f"(seed {self.seed}), {self.mismatches} mismatching"]
        if self.first_divergence:
            lines.append(f"first divergence: {self.first_divergence.format()}")
        return "\n".join(lines)


def generate_episode(index: int, seed: np.random.SeedSequence, cycles: int) -> Episode:
    """Draw weights, parameters and currents for one episode."""
    rng = np.random.default_rng(seed)
    weights = rng.integers(0, BYTE_MAX + 1, size=(LAYER_SIZE, LAYER_SIZE))
    threshold = int(rng.integers(0, BYTE_MAX + 1))
    leak = int(rng.integers(0, MAX_RANDOM_LEAK + 1))
    refractory_period = int(rng.integers(0, MAX_RANDOM_REFRACTORY + 1))
    currents = rng.integers(0, BYTE_MAX + 1, size=(cycles, LAYER_SIZE))

    return Episode(
        index=index,
        weights=WeightMatrix(tuple(tuple(int(w) for w in row) for row in weights)),
        params=NeuronParams(threshold, leak, refractory_period),
        currents=tuple(tuple(int(i) for i in row) for row in currents),
    )


def run_episode(episode: Episode) -> Optional[Divergence]:
    """Compare model and oracle over one episode; None when they agree throughout."""
    expected = oracle_network_trace(episode.weights, episode.params, episode.currents)

    state = network_reset()
    for cycle, (ext, want) in enumerate(zip(episode.currents, expected.records)):
        state, _, _ = network_step(state, episode.weights, episode.params, ext)
        for k, neuron in enumerate(state.neurons):
            for name, model, oracle in (
                ("membrane", neuron.membrane, want.membranes[k]),
                ("spike", neuron.spiked, want.spikes[k]),
                ("refractory", neuron.refractory_count, want.refractory[k]),
            ):
                if model != oracle:
                    return Divergence(episode.index, cycle, f"{name}[{NEURON_NAMES[k]}]", model, oracle)
    return None


def _run_episodes_parallel(
    seeds: Sequence[np.random.SeedSequence],
    config: CheckConfig
) -> Dict[int, Optional[Divergence]]:
    """Run episodes on a worker pool."""
    results: Dict[int, Optional[Divergence]] = {}

    with ThreadPoolExecutor(max_workers=config.max_workers) as executor:
        futures = {}
        for index, seed in enumerate(seeds):
            episode = generate_episode(index, seed, config.cycles_per_episode)
            futures[executor.submit(run_episode, episode)] = index

        for future in as_completed(futures):
            results[futures[future]] = future.result()

    return results


def _run_episodes_sequential(
    seeds: Sequence[np.random.SeedSequence],
    config: CheckConfig
) -> Dict[int, Optional[Divergence]]:
    """Run episodes one after another."""
    results: Dict[int, Optional[Divergence]] = {}

    for index, seed in enumerate(seeds):
        episode = generate_episode(index, seed, config.cycles_per_episode)
        results[index] = run_episode(episode)

    return results


def run_check(config: Optional[CheckConfig] = None) -> CheckReport:
    """Run the differential check and report the first divergence by episode order."""
    config = config or CheckConfig()
    logger.info("checking %d episodes x %d cycles against the oracle (seed %d, %s)",
                config.episodes, config.cycles_per_episode, config.seed,
                "parallel" if config.parallel_processing else "sequential")

    started = time.perf_counter()
    seeds = np.random.SeedSequence(config.seed).spawn(config.episodes)
    if config.parallel_processing:
        results = _run_episodes_parallel(seeds, config)
    else:
        results = _run_episodes_sequential(seeds, config)

    report = CheckReport(
        episodes=config.episodes,
        cycles_per_episode=config.cycles_per_episode,
        seed=config.seed,
        elapsed=time.perf_counter() - started,
    )
    divergences: List[Divergence] = [results[k] for k in sorted(results) if results[k] is not None]
    report.mismatches = len(divergences)
    if divergences:
        report.first_divergence = divergences[0]
        logger.warning("%d of %d episodes diverge; first: %s",
                       report.mismatches, report.episodes, report.first_divergence.format())

    logger.info("check finished in %.2fs", report.elapsed)
    return report
