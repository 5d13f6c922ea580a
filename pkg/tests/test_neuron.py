import numpy as np
import pytest

from snnchip.core.neuron import (
    NeuronParams, NeuronState, neuron_reset, neuron_step, saturating_integrate
)


class TestNeuronReset:

    def test_reset_state_is_all_zero(self):
        state = neuron_reset()
        assert state == NeuronState(membrane=0, refractory_count=0, spiked=False)

    def test_reset_is_deterministic(self):
        assert neuron_reset() == neuron_reset()

    def test_zero_input_never_crosses_max_threshold(self):
        params = NeuronParams(threshold=255)
        state = neuron_reset()
        for _ in range(100):
            state = neuron_step(state, params, 0)
            assert not state.spiked


class TestSaturatingIntegrate:

    @pytest.mark.parametrize("membrane, current, leak, expected", [
        (10, 5, 3, 12),
        (0, 0, 200, 0),
        (200, 100, 0, 255),
        (255, 255, 255, 255),
        (0, 255, 0, 255),
        (100, 0, 100, 0),
        (100, 0, 99, 1),
    ])
    def test_examples(self, membrane, current, leak, expected):
        assert saturating_integrate(membrane, current, leak) == expected

    @pytest.mark.slow
    def test_exhaustive_against_unbounded_clamp(self):
        integrate = np.frompyfunc(saturating_integrate, 3, 1)
        current = np.arange(256).reshape(256, 1)
        leak = np.arange(256).reshape(1, 256)
        for membrane in range(256):
            expected = np.clip(membrane + current - leak, 0, 255)
            actual = integrate(membrane, current, leak).astype(np.int64)
            assert np.array_equal(actual, expected), f"mismatch for membrane={membrane}"


class TestNeuronStep:

    @pytest.mark.parametrize("state, params, current, expected", [
        (NeuronState(0, 0), NeuronParams(255, 0, 4), 0, NeuronState(0, 0, False)),
        (NeuronState(200, 0), NeuronParams(250, 0, 3), 100, NeuronState(0, 3, True)),
        (NeuronState(0, 2), NeuronParams(0, 0, 2), 255, NeuronState(0, 1, False)),
        (NeuronState(250, 0), NeuronParams(250, 0, 1), 0, NeuronState(250, 0, False)),
    ])
    def test_examples(self, state, params, current, expected):
        assert neuron_step(state, params, current) == expected

    def test_threshold_is_strict(self):
        params = NeuronParams(threshold=20)
        assert not neuron_step(NeuronState(10), params, 10).spiked
        assert neuron_step(NeuronState(10), params, 11).spiked

    def test_zero_threshold_fires_on_any_positive_membrane(self):
        params = NeuronParams(threshold=0)
        assert not neuron_step(neuron_reset(), params, 0).spiked
        assert neuron_step(neuron_reset(), params, 1).spiked

    def test_refractory_discards_input(self):
        params = NeuronParams(threshold=5, leak=0, refractory_period=1)
        state = neuron_step(neuron_reset(), params, 10)
        assert state.spiked and state.refractory_count == 1

        state = neuron_step(state, params, 255)
        assert state == NeuronState(0, 0, False)

        # input from the held cycle was not accumulated
        state = neuron_step(state, params, 3)
        assert state == NeuronState(3, 0, False)

    def test_leak_drains_membrane(self):
        params = NeuronParams(threshold=255, leak=4)
        state = NeuronState(membrane=10)
        state = neuron_step(state, params, 0)
        assert state.membrane == 6
        state = neuron_step(state, params, 0)
        state = neuron_step(state, params, 0)
        assert state.membrane == 0

    def test_refractory_spacing(self, rng):
        violations = 0
        for _ in range(10_000):
            params = NeuronParams(
                threshold=int(rng.integers(0, 64)),
                leak=int(rng.integers(0, 16)),
                refractory_period=int(rng.integers(1, 256)),
            )
            state = neuron_reset()
            last_spike = None
            for cycle, current in enumerate(rng.integers(0, 256, size=48)):
                state = neuron_step(state, params, int(current))
                if state.spiked:
                    if last_spike is not None and cycle - last_spike < params.refractory_period + 1:
                        violations += 1
                    last_spike = cycle
        assert violations == 0

    def test_silent_for_exactly_refractory_period(self):
        params = NeuronParams(threshold=0, leak=0, refractory_period=3)
        spikes = []
        state = neuron_reset()
        for _ in range(9):
            state = neuron_step(state, params, 255)
            spikes.append(state.spiked)
        assert spikes == [True, False, False, False, True, False, False, False, True]

    def test_monotone_accumulation_without_leak(self, rng):
        params = NeuronParams(threshold=255, leak=0)
        state = neuron_reset()
        for current in rng.integers(0, 40, size=200):
            new_state = neuron_step(state, params, int(current))
            assert new_state.membrane >= state.membrane
            state = new_state

    @pytest.mark.slow
    def test_membrane_bounded_under_fuzzing(self, rng):
        steps = 0
        while steps < 1_000_000:
            params = NeuronParams(*(int(v) for v in rng.integers(0, 256, size=3)))
            state = neuron_reset()
            for current in rng.integers(0, 256, size=1000).tolist():
                state = neuron_step(state, params, current)
                assert 0 <= state.membrane <= 255
                if state.refractory_count > 0:
                    assert state.membrane == 0
            steps += 1000


class TestValueObjects:

    @pytest.mark.parametrize("kwargs", [
        {"threshold": 256},
        {"leak": -1},
        {"refractory_period": 1.5},
        {"threshold": True},
    ])
    def test_params_reject_unrepresentable_values(self, kwargs):
        with pytest.raises(ValueError):
            NeuronParams(**kwargs)

    def test_state_rejects_refractory_with_charge(self):
        with pytest.raises(ValueError):
            NeuronState(membrane=5, refractory_count=1)

    def test_state_rejects_spike_with_charge(self):
        with pytest.raises(ValueError):
            NeuronState(membrane=5, spiked=True)

    def test_to_dict(self):
        assert NeuronParams(1, 2, 3).to_dict() == {"threshold": 1, "leak": 2, "refractory_period": 3}
        assert NeuronState(0, 2, False).to_dict() == {"membrane": 0, "refractory_count": 2, "spiked": False}

    @pytest.mark.parametrize("count, expected", [(0, False), (1, True), (255, True)])
    def test_is_refractory(self, count, expected):
        assert NeuronState(refractory_count=count).is_refractory is expected

    def test_refractory_state_ignores_input(self):
        state = neuron_step(NeuronState(refractory_count=1), NeuronParams(threshold=0), 255)
        assert state == NeuronState()
        assert not state.is_refractory
