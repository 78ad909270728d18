"""Circuit math against an independent series-parallel oracle."""

import math

import numpy as np
import pytest

from gridcommons import (
    SystemParams,
    Topology,
    TopologySpec,
    approx_gain,
    exact_gain,
    power_per_agent,
    power_vector,
    tipping_point,
    total_power,
    validate_params,
)


def make_params(N, R_V=2.0, R_0=200.0, V=1.0):
    return validate_params(SystemParams(
        N=N, R_V=R_V, R_0=R_0, V=V, lambda_min=0.0005, p_err=0.0,
        topology=TopologySpec(Topology.BARABASI_ALBERT, ba_m=1), steps=1, burn_in=0, seed=0,
    ))


def circuit_oracle(a_i, n, params):
    """Solve the circuit directly: source, series resistor, n parallel loads.

    I = V*sqrt(N) / (R_V + R/n); bank voltage U = I*R/n; an agent with a_i
    resistors of value R draws U^2 * a_i / R. Independent of the closed
    form under test.
    """
    R = params.R_total
    current = params.V_scaled / (params.R_V + R / n)
    bank_voltage = current * R / n
    return bank_voltage**2 * a_i / R


class TestPowerPerAgent:
    def test_half_optimum_pair(self):
        # N=2, mu=100, both agents at the optimum count
        params = make_params(2, R_V=2.0, R_0=200.0)
        p = power_per_agent(100, 200, params)
        assert p == pytest.approx(params.P_typ / 4, rel=1e-12)
        assert p == pytest.approx(circuit_oracle(100, 200, params), rel=1e-12)

    def test_single_agent_single_resistor(self):
        params = make_params(2, R_V=2.0, R_0=200.0)
        # same closed form evaluated at N=1 via a hand-built params object
        single = validate_params(SystemParams(
            N=2, R_V=2.0, R_0=200.0, V=1.0, lambda_min=0.1, p_err=0.0,
            topology=TopologySpec(Topology.BARABASI_ALBERT, ba_m=1), steps=1, burn_in=0, seed=0,
        ))
        del params
        p = power_per_agent(1, 2, single)
        assert p == pytest.approx(circuit_oracle(1, 2, single), rel=1e-12)

    def test_known_value_n1(self):
        # mu=100, lone agent with one resistor: P = P_typ * 100 / 101^2
        params = validate_params(SystemParams(
            N=2, R_V=1.0, R_0=100.0, V=1.0, lambda_min=0.1, p_err=0.0,
            topology=TopologySpec(Topology.BARABASI_ALBERT, ba_m=1), steps=1, burn_in=0, seed=0,
        ))
        # a_avg = 1 requires n = N; use both agents at one resistor
        p = power_per_agent(1, 2, params)
        assert p == pytest.approx(params.P_typ * 100 / 101**2, rel=1e-12)
        assert p / params.P_typ == pytest.approx(9.8030e-3, rel=1e-4)

    def test_domain_errors(self):
        params = make_params(5)
        with pytest.raises(ValueError):
            power_per_agent(0, 10, params)
        with pytest.raises(ValueError):
            power_per_agent(11, 10, params)
        with pytest.raises(ValueError):
            power_per_agent(2, 4, params)  # n below N

    @pytest.mark.parametrize("N", [2, 5, 100, 1000])
    def test_oracle_equivalence_random_states(self, N):
        params = make_params(N)
        rng = np.random.default_rng(99)
        for _ in range(200):
            a = rng.integers(1, 300, size=N)
            n = int(a.sum())
            i = int(rng.integers(N))
            assert power_per_agent(int(a[i]), n, params) == pytest.approx(
                circuit_oracle(int(a[i]), n, params), rel=1e-12
            )


class TestTotalPower:
    def test_all_at_mu_reaches_quarter_typ_each(self):
        params = make_params(10)
        a = np.full(10, 100)
        assert total_power(a, params) == pytest.approx(10 * params.P_typ / 4, rel=1e-12)

    def test_brute_force_optimum_location(self):
        params = make_params(5)
        mu = params.mu
        best_n, best_p = None, -1.0
        for n in range(5, int(3 * 5 * mu) + 1):
            # symmetric split is irrelevant: total depends only on n
            p = params.P_typ * params.mu * n / (n / 5 + mu) ** 2
            if p > best_p:
                best_n, best_p = n, p
        assert abs(best_n - round(5 * mu)) <= 1

    def test_permutation_symmetry(self):
        params = make_params(6)
        rng = np.random.default_rng(3)
        a = rng.integers(1, 50, size=6)
        perm = rng.permutation(6)
        assert power_vector(a, params)[perm] == pytest.approx(power_vector(a[perm], params), rel=1e-15)

    def test_monotone_feedback_sign(self):
        # adding resistors elsewhere strictly lowers an unchanged agent's power
        params = make_params(4)
        a = np.array([5, 5, 5, 5])
        b = np.array([5, 5, 5, 9])
        assert power_vector(b, params)[0] < power_vector(a, params)[0]


class TestExactGain:
    def test_zero_iff_equal(self):
        assert exact_gain(1.5, 1.5) == 0.0

    def test_doubling(self):
        assert exact_gain(3.0, 1.5) == pytest.approx(1.0)

    def test_lone_agent_one_to_two(self):
        # mu=100, single agent, a 1 -> 2: gain = 2*(101/102)^2 - 1
        p1 = 100 * 1 / (1 + 100) ** 2
        p2 = 100 * 2 / (2 + 100) ** 2
        expected = 2 * (101 / 102) ** 2 - 1
        assert exact_gain(p2, p1) == pytest.approx(expected, rel=1e-12)
        assert expected == pytest.approx(0.96097, abs=1e-5)

    def test_rejects_nonpositive_reference(self):
        with pytest.raises(ValueError):
            exact_gain(1.0, 0.0)


class TestApproxGain:
    def test_large_system_own_term_only(self):
        params = validate_params(SystemParams(
            N=10**12, R_V=2.0, R_0=200.0, V=1.0, lambda_min=0.1, p_err=0.0,
            topology=TopologySpec(Topology.RING), steps=1, burn_in=0, seed=0,
        ))
        g = approx_gain(100, 1, 0, 100.0, params)
        assert g == pytest.approx(0.01, abs=1e-9)

    def test_no_change_is_zero(self):
        params = make_params(100)
        assert approx_gain(50, 0, 0, 60.0, params) == 0.0

    def test_grid_agreement_with_exact(self):
        # first-order estimate within 10% of the exact gain near the optimum
        params = make_params(100)
        worst = 0.0
        for a_i in (50, 100, 150, 200):
            for a_avg in (50, 100, 150, 200):
                n = a_avg * 100
                for da in (-1, 0, 1):
                    for dr in (-1, 0, 1):
                        if a_i + da < 1:
                            continue
                        p_old = params.P_typ * params.mu * a_i / (a_avg + params.mu) ** 2
                        p_new = params.P_typ * params.mu * (a_i + da) / ((n + da + dr) / 100 + params.mu) ** 2
                        exact = p_new / p_old - 1.0
                        if exact == 0.0:
                            continue
                        approx = approx_gain(a_i + da, da, dr, (n + da + dr) / 100, params)
                        worst = max(worst, abs(approx - exact) / abs(exact))
        assert worst < 0.10

    def test_matches_central_finite_difference(self):
        # total-derivative check at a_i = a_avg = mu, unit steps in (a, r)
        params = make_params(100)
        mu = params.mu
        a_i, n = 100, 100 * 100

        def power(a, r):
            return params.P_typ * params.mu * a / ((a + r) / 100 + mu) ** 2

        r_i = n - a_i
        for da, dr in ((1, 0), (0, 1), (1, 1), (-1, 1)):
            fd = (power(a_i + da, r_i + dr) - power(a_i - da, r_i - dr)) / 2
            fd_gain = fd / power(a_i, r_i)
            approx = approx_gain(a_i, da, dr, n / 100, params)
            if fd_gain != 0:
                assert abs(approx - fd_gain) / abs(fd_gain) < 0.05


class TestTippingPoint:
    def test_paper_value(self):
        assert tipping_point(0.0005) == pytest.approx(2000.0)

    def test_unit(self):
        assert tipping_point(1.0) == 1.0

    def test_direct_evaluation(self):
        assert tipping_point(0.005) == pytest.approx(200.0)

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            tipping_point(0.0)
        with pytest.raises(ValueError):
            tipping_point(-0.1)
