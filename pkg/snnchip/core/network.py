"""
Network
=======

The two-layer, three-neurons-per-layer fully connected spiking array.

Layer 1 is driven by three external 8-bit currents. Layer 2 is driven by the
weighted spikes of layer 1, taken from the spike registers of the previous
cycle, so every layer-2 response lags its cause by exactly one clock.
Both layers share one NeuronParams.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List, Sequence, Tuple

from .neuron import (
    BYTE_MAX, NeuronParams, NeuronState,
    check_byte, neuron_reset, neuron_step
)

LAYER_SIZE = 3

Spikes = Tuple[bool, bool, bool]
Currents = Tuple[int, int, int]

NO_SPIKES: Spikes = (False, False, False)


@dataclass(frozen=True)
class WeightMatrix:
    """
    Synaptic strengths between the layers.

    ``w[i][j]`` is the weight from layer-1 neuron ``j`` to layer-2 neuron
    ``i``. The flattened order is row-major, ``i*3 + j``.
    """
    w: Tuple[Tuple[int, ...], ...] = ((0, 0, 0), (0, 0, 0), (0, 0, 0))

    def __post_init__(self):
        rows = tuple(tuple(row) for row in self.w)
        if len(rows) != LAYER_SIZE or any(len(row) != LAYER_SIZE for row in rows):
            raise ValueError(f"weight matrix must be {LAYER_SIZE}x{LAYER_SIZE}")
        for i, row in enumerate(rows):
            for j, value in enumerate(row):
                check_byte(f"w[{i}][{j}]", value)
        object.__setattr__(self, "w", rows)

    @classmethod
    def from_flat(cls, values: Iterable[int]) -> "WeightMatrix":
        flat = list(values)
        if len(flat) != LAYER_SIZE * LAYER_SIZE:
            raise ValueError(f"expected {LAYER_SIZE * LAYER_SIZE} weights, got {len(flat)}")
        return cls(tuple(
            tuple(flat[i * LAYER_SIZE:(i + 1) * LAYER_SIZE]) for i in range(LAYER_SIZE)
        ))

    def flat(self) -> Tuple[int, ...]:
        return tuple(value for row in self.w for value in row)

    def permute_sources(self, order: Sequence[int]) -> "WeightMatrix":
        """Reorder the layer-1 (column) index: new column k is old column order[k]."""
        return WeightMatrix(tuple(tuple(row[j] for j in order) for row in self.w))


@dataclass(frozen=True)
class NetworkState:
    """Registered state of all six neurons plus the inter-layer spike register."""
    layer1: Tuple[NeuronState, ...] = field(
        default_factory=lambda: (neuron_reset(),) * LAYER_SIZE
    )
    layer2: Tuple[NeuronState, ...] = field(
        default_factory=lambda: (neuron_reset(),) * LAYER_SIZE
    )
    layer1_spikes_reg: Spikes = NO_SPIKES

    @property
    def neurons(self) -> Tuple[NeuronState, ...]:
        """Layer 1 then layer 2, the order used by traces."""
        return self.layer1 + self.layer2

    def to_dict(self) -> Dict[str, Any]:
        return {
            "layer1": [n.to_dict() for n in self.layer1],
            "layer2": [n.to_dict() for n in self.layer2],
            "layer1_spikes_reg": list(self.layer1_spikes_reg),
        }


def compute_layer2_currents(weights: WeightMatrix, layer1_spikes: Sequence[bool]) -> Currents:
    """Sum of weights of the spiking sources, saturated at 255 per neuron."""
    currents: List[int] = []
    for row in weights.w:
        total = sum(weight for weight, spike in zip(row, layer1_spikes) if spike)
        currents.append(min(total, BYTE_MAX))
    return tuple(currents)


def network_reset() -> NetworkState:
    """Return the all-zero post-reset network state."""
    return NetworkState()


def network_step(
    state: NetworkState,
    weights: WeightMatrix,
    params: NeuronParams,
    external_currents: Sequence[int]
) -> Tuple[NetworkState, Spikes, Spikes]:
    """
    Advance the whole array by one clock cycle.

    Returns the new state with this cycle's layer-1 and layer-2 spikes.
    """
    if len(external_currents) != LAYER_SIZE:
        raise ValueError(f"expected {LAYER_SIZE} external currents, got {len(external_currents)}")

    layer1 = tuple(
        neuron_step(neuron, params, current)
        for neuron, current in zip(state.layer1, external_currents)
    )

    layer2_currents = compute_layer2_currents(weights, state.layer1_spikes_reg)
    layer2 = tuple(
        neuron_step(neuron, params, current)
        for neuron, current in zip(state.layer2, layer2_currents)
    )

    layer1_spikes = tuple(n.spiked for n in layer1)
    layer2_spikes = tuple(n.spiked for n in layer2)

    new_state = NetworkState(
        layer1=layer1,
        layer2=layer2,
        layer1_spikes_reg=layer1_spikes
    )
    return new_state, layer1_spikes, layer2_spikes
