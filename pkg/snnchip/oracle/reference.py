"""
Reference Oracle
================

A direct, deliberately naive transcription of the neuron and network
equations, used as ground truth when testing the cycle-accurate model.

Nothing here is shared with ``snnchip.core``: the arithmetic is redone with
plain unbounded integers and explicit clamps so that a bug would have to be
written twice to go unnoticed. Ordering follows the chip:

    refractory hold first (input discarded, counter counts down)
    v = min(max(i + v_prev - leak, 0), 255)
    spike when v > threshold; membrane cleared and counter loaded that cycle
    layer 2 sees the layer-1 spikes of the previous cycle
"""

from dataclasses import dataclass, field
from typing import List, Sequence, Tuple


@dataclass
class OracleRecord:
    """Values of all six neurons after one cycle, layer 1 first."""
    membranes: List[int]
    spikes: List[bool]
    refractory: List[int]


@dataclass
class OracleTrace:
    """Per-cycle oracle records."""
    records: List[OracleRecord] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.records)

    def spike_train(self, neuron: int) -> List[bool]:
        return [record.spikes[neuron] for record in self.records]


class _OracleNeuron:
    def __init__(self, threshold: int, leak: int, refractory_period: int):
        self.threshold = threshold
        self.leak = leak
        self.refractory_period = refractory_period
        self.v = 0
        self.hold = 0
        self.s = False

    def tick(self, i_in: int) -> None:
        if self.hold != 0:
            self.hold = self.hold - 1
            self.v = 0
            self.s = False
            return

        v = i_in + self.v - self.leak
        if v < 0:
            v = 0
        if v > 255:
            v = 255

        if v > self.threshold:
            self.v = 0
            self.s = True
            self.hold = self.refractory_period
        else:
            self.v = v
            self.s = False


def oracle_neuron_trace(params, currents: Sequence[int]) -> List[Tuple[int, bool]]:
    """Membrane and spike of one neuron for each input current in turn."""
    neuron = _OracleNeuron(params.threshold, params.leak, params.refractory_period)
    out = []
    for i_in in currents:
        neuron.tick(i_in)
        out.append((neuron.v, neuron.s))
    return out


def oracle_network_trace(weights, params, externals: Sequence[Sequence[int]]) -> OracleTrace:
    """Run all six neurons over the external current sequence."""
    w = [list(row) for row in weights.w]
    layer1 = [_OracleNeuron(params.threshold, params.leak, params.refractory_period) for _ in range(3)]
    layer2 = [_OracleNeuron(params.threshold, params.leak, params.refractory_period) for _ in range(3)]

    x = [0, 0, 0]
    trace = OracleTrace()
    for ext in externals:
        for k in range(3):
            layer1[k].tick(ext[k])

        for i in range(3):
            i_in = w[i][0] * x[0] + w[i][1] * x[1] + w[i][2] * x[2]
            layer2[i].tick(min(i_in, 255))

        x = [1 if n.s else 0 for n in layer1]

        neurons = layer1 + layer2
        trace.records.append(OracleRecord(
            membranes=[n.v for n in neurons],
            spikes=[n.s for n in neurons],
            refractory=[n.hold for n in neurons],
        ))
    return trace
