"""
LIF Neuron
==========

The digital leaky integrate-and-fire neuron of the spiking array.

Each neuron holds one accumulator (the membrane potential), a refractory
down-counter and a registered spike flag. One call to ``neuron_step`` is one
rising edge of the system clock. All arithmetic is unsigned 8-bit and
saturating: the membrane never wraps past 255 and never underflows below 0.
"""

from dataclasses import dataclass
from typing import Any, Dict

BYTE_MAX = 0xFF


def check_byte(name: str, value: int) -> None:
    """Raise ValueError unless ``value`` fits an unsigned 8-bit register."""
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValueError(f"{name} must be an integer, got {value!r}")
    if not 0 <= value <= BYTE_MAX:
        raise ValueError(f"{name} must be in [0, {BYTE_MAX}], got {value}")


@dataclass(frozen=True)
class NeuronParams:
    """
    Programmable parameters shared by every neuron on the chip.

    The comparison against ``threshold`` is strict, so a threshold of 255
    can never be crossed.
    """
    threshold: int = 0
    leak: int = 0
    refractory_period: int = 0

    def __post_init__(self):
        check_byte("threshold", self.threshold)
        check_byte("leak", self.leak)
        check_byte("refractory_period", self.refractory_period)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "threshold": self.threshold,
            "leak": self.leak,
            "refractory_period": self.refractory_period,
        }


@dataclass(frozen=True)
class NeuronState:
    """Registered state of a single neuron after a completed clock edge."""
    membrane: int = 0
    refractory_count: int = 0
    spiked: bool = False

    def __post_init__(self):
        if not (0 <= self.membrane <= BYTE_MAX and 0 <= self.refractory_count <= BYTE_MAX):
            raise ValueError(
                f"membrane and refractory_count must be in [0, {BYTE_MAX}], "
                f"got {self.membrane} and {self.refractory_count}"
            )
        if self.refractory_count > 0 and self.membrane != 0:
            raise ValueError("a refractory neuron must hold membrane == 0")
        if self.spiked and self.membrane != 0:
            raise ValueError("a neuron that just spiked must hold membrane == 0")

    @property
    def is_refractory(self) -> bool:
        return self.refractory_count > 0

    def to_dict(self) -> Dict[str, Any]:
        return {
            "membrane": self.membrane,
            "refractory_count": self.refractory_count,
            "spiked": self.spiked,
        }


RESET_STATE = NeuronState()


def neuron_reset() -> NeuronState:
    """Return the all-zero post-reset neuron state."""
    return RESET_STATE


def saturating_integrate(membrane: int, input_current: int, leak: int) -> int:
    """
    Integrate one cycle of input into the membrane.

    Adds first, subtracts the leak with a floor of 0, then caps at 255.
    Python ints never wrap, which stands in for the 9-bit adder of the
    hardware.
    """
    total = membrane + input_current
    total = total - leak if total > leak else 0
    return BYTE_MAX if total > BYTE_MAX else total


def neuron_step(
    state: NeuronState,
    params: NeuronParams,
    input_current: int
) -> NeuronState:
    """
    Advance one neuron by a single clock cycle.

    A refractory neuron ignores its input and only counts down. Otherwise the
    freshly integrated value is compared against the threshold; on a spike the
    membrane is cleared in the same cycle and the refractory counter loads.
    """
    if state.is_refractory:
        return NeuronState(
            membrane=0,
            refractory_count=state.refractory_count - 1,
            spiked=False
        )

    integrated = saturating_integrate(state.membrane, input_current, params.leak)

    if integrated > params.threshold:
        return NeuronState(
            membrane=0,
            refractory_count=params.refractory_period,
            spiked=True
        )

    return NeuronState(membrane=integrated, refractory_count=0, spiked=False)
