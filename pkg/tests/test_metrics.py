"""Summary metrics: cooperation average, power utilisation, Gini index."""

import numpy as np
import pytest

import gridcommons as gc
from gridcommons import avg_cooperation, gini_index, power_utilisation, time_avg_power
from gridcommons.metrics import summarize


def make_params(N=4, **overrides):
    defaults = dict(
        N=N, R_V=2.0, R_0=200.0, V=1.0, lambda_min=0.0005, p_err=0.01,
        topology=gc.TopologySpec(gc.Topology.RING), steps=10, burn_in=0, seed=0,
    )
    defaults.update(overrides)
    return gc.validate_params(gc.SystemParams(**defaults))


class TestAvgCooperation:
    def test_all_cooperate(self):
        s = np.full((5, 4), -1, dtype=np.int8)
        assert avg_cooperation(s) == 1.0

    def test_none_cooperate(self):
        s = np.zeros((5, 4), dtype=np.int8)
        assert avg_cooperation(s) == 0.0

    def test_hand_evaluated_mix(self):
        # 2 agents, 2 frames, cooperator counts 1 and 2 -> (0.5 + 1.0) / 2
        s = np.array([[-1, 0], [-1, -1]], dtype=np.int8)
        assert avg_cooperation(s) == pytest.approx(0.75)

    def test_burn_in_slicing(self):
        s = np.array([[1, 1], [-1, -1], [-1, -1]], dtype=np.int8)
        assert avg_cooperation(s, burn_in=1) == 1.0

    def test_rejects_burn_in_at_frame_count(self):
        s = np.zeros((3, 2), dtype=np.int8)
        with pytest.raises(ValueError):
            avg_cooperation(s, burn_in=3)

    def test_fractions_sum_to_one(self):
        rng = np.random.default_rng(1)
        s = rng.integers(-1, 2, size=(50, 7)).astype(np.int8)
        total = sum(np.mean(s == v) for v in (-1, 0, 1))
        assert total == pytest.approx(1.0)


class TestTimeAvgPower:
    def test_constant_power(self):
        p = np.full((6, 3), 2.5)
        assert time_avg_power(p) == pytest.approx([2.5, 2.5, 2.5])

    def test_alternating(self):
        p = np.array([[1.0], [3.0], [1.0], [3.0]])
        assert time_avg_power(p)[0] == pytest.approx(2.0)

    def test_matches_streaming_oracle(self):
        rng = np.random.default_rng(2)
        p = rng.random((200, 5))
        streaming = np.zeros(5)
        for k, row in enumerate(p, start=1):
            streaming += (row - streaming) / k
        assert time_avg_power(p) == pytest.approx(streaming, rel=1e-12)


class TestPowerUtilisation:
    def test_optimum_is_one(self):
        params = make_params(N=6)
        p_avg = np.full(6, params.P_typ / 4)
        assert power_utilisation(p_avg, params) == pytest.approx(1.0)

    def test_all_zero(self):
        params = make_params(N=3)
        assert power_utilisation(np.zeros(3), params) == 0.0

    def test_invariant_under_voltage_scaling(self):
        # P_i and P_typ both scale with V^2, so P_util is unchanged
        params1 = make_params(N=4, V=1.0)
        params2 = make_params(N=4, V=3.0)
        p1 = np.array([0.01, 0.02, 0.03, 0.04])
        p2 = p1 * 9.0
        assert power_utilisation(p1, params1) == pytest.approx(power_utilisation(p2, params2))


def gini_mean_abs_difference(values):
    """Oracle: G = sum |x_i - x_j| / (2 n^2 mean)."""
    x = np.asarray(values, dtype=float)
    n = x.size
    diffs = np.abs(x[:, None] - x[None, :]).sum()
    return diffs / (2 * n * n * x.mean())


class TestGiniIndex:
    def test_equality_is_zero(self):
        assert gini_index(np.full(9, 3.3)) == pytest.approx(0.0, abs=1e-12)

    def test_two_agents_one_three(self):
        assert gini_index(np.array([1.0, 3.0])) == pytest.approx(0.25)
        assert gini_mean_abs_difference([1.0, 3.0]) == pytest.approx(0.25)

    def test_extreme_concentration(self):
        n = 1000
        v = np.zeros(n)
        v[-1] = 1.0
        assert gini_index(v) == pytest.approx((n - 1) / n)

    def test_against_mean_abs_difference_oracle(self):
        rng = np.random.default_rng(5)
        for _ in range(100):
            v = rng.random(rng.integers(2, 40)) + 0.01
            assert gini_index(v) == pytest.approx(gini_mean_abs_difference(v), abs=1e-12)

    def test_permutation_and_scale_invariance(self):
        rng = np.random.default_rng(6)
        for _ in range(100):
            v = rng.random(20) + 0.01
            g = gini_index(v)
            assert gini_index(rng.permutation(v)) == pytest.approx(g, abs=1e-12)
            assert gini_index(v * 7.3) == pytest.approx(g, abs=1e-12)

    def test_rejects_all_zero(self):
        with pytest.raises(ValueError):
            gini_index(np.zeros(4))

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            gini_index(np.array([1.0, -0.5]))


class TestSummarize:
    def test_report_ranges(self):
        params = make_params(N=10, steps=200, seed=9)
        report = summarize(gc.run(params))
        assert 0.0 <= report.c_avg <= 1.0
        assert 0.0 <= report.gini <= 1.0
        assert report.P_util > 0.0
        assert report.P_i_avg.shape == (10,)

    def test_burn_in_default_comes_from_params(self):
        params = make_params(N=10, steps=100, burn_in=50, seed=9)
        result = gc.run(params)
        assert summarize(result).c_avg == summarize(result, burn_in=50).c_avg
