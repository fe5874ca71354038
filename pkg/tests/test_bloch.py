import csv
import io
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.optimize import minimize_scalar

from gateflow.bloch import (
    TRAJECTORY_HEADER,
    BlochPoint,
    bloch_point,
    gate_axis,
    latitude_residual,
    qubit_from_angles,
    rebit_deviation,
    sample_trajectory,
)
from gateflow.errors import DimensionMismatchError, ZeroVectorError
from gateflow.gates import catalog

from conftest import random_state

SQ2 = math.sqrt(2)


def deviation_oracle(psi, grid=4096):
    """Grid search over the global phase, refined by a bounded 1-D minimiser."""

    def f(chi):
        return float(np.sum(np.imag(np.exp(1j * chi) * psi) ** 2))

    chis = np.linspace(0, 2 * np.pi, grid, endpoint=False)
    vals = np.sum(np.imag(np.exp(1j * chis)[:, None] * psi[None, :]) ** 2, axis=1)
    k = int(np.argmin(vals))
    step = 2 * np.pi / grid
    res = minimize_scalar(f, bounds=(chis[k] - step, chis[k] + step), method="bounded", options={"xatol": 1e-13})
    return math.sqrt(max(min(res.fun, vals[k]), 0.0))


def angle_diff(a, b):
    return abs((a - b + math.pi) % (2 * math.pi) - math.pi)


class TestQubitFromAngles:
    def test_north_pole(self):
        np.testing.assert_allclose(qubit_from_angles(0, 1.234), [1, 0])

    def test_x0(self):
        np.testing.assert_allclose(qubit_from_angles(math.pi / 2, 0), np.array([1, 1]) / SQ2)

    def test_h0(self):
        np.testing.assert_allclose(qubit_from_angles(math.pi / 4, 0), [math.cos(math.pi / 8), math.sin(math.pi / 8)])


class TestBlochPoint:
    def test_pole(self):
        p = bloch_point([1, 0])
        assert (p.theta, p.phi) == (0, 0)
        np.testing.assert_allclose(p.cart, [0, 0, 1])

    def test_plus_i(self):
        p = bloch_point(np.array([1, 1j]) / SQ2)
        assert abs(p.theta - math.pi / 2) < 1e-12 and abs(p.phi - math.pi / 2) < 1e-12
        np.testing.assert_allclose(p.cart, [0, 1, 0], atol=1e-12)

    @pytest.mark.parametrize("chi", [0.0, 0.7, 2.0, -3.0])
    def test_south_pole_any_phase(self, chi):
        p = bloch_point([0, np.exp(1j * chi)])
        assert abs(p.theta - math.pi) < 1e-12 and p.phi == 0

    def test_unnormalised_input(self):
        p = bloch_point([3, 3])
        assert abs(p.theta - math.pi / 2) < 1e-12 and p.phi == 0

    def test_zero_vector(self):
        with pytest.raises(ZeroVectorError):
            bloch_point([0, 0])

    def test_wrong_size(self):
        with pytest.raises(DimensionMismatchError):
            bloch_point([1, 0, 0])

    def test_unit_cart(self, rng):
        for _ in range(100):
            p = bloch_point(random_state(rng, 2))
            assert abs(np.linalg.norm(p.cart) - 1) < 1e-12
            assert 0 <= p.theta <= math.pi and 0 <= p.phi < 2 * math.pi

    @settings(max_examples=200, deadline=None)
    @given(st.floats(1e-3, math.pi - 1e-3), st.floats(0, 2 * math.pi, exclude_max=True))
    def test_round_trip(self, theta, phi):
        p = bloch_point(qubit_from_angles(theta, phi))
        assert abs(p.theta - theta) < 1e-10
        assert angle_diff(p.phi, phi) < 1e-10

    def test_global_phase_invariance(self, rng):
        for _ in range(100):
            psi = random_state(rng, 2)
            chi = rng.uniform(0, 2 * np.pi)
            a, b = bloch_point(psi), bloch_point(np.exp(1j * chi) * psi)
            assert abs(a.theta - b.theta) < 1e-12 and angle_diff(a.phi, b.phi) < 1e-12

    def test_from_cart(self):
        p = BlochPoint.from_cart([0, -1, 0])
        assert abs(p.theta - math.pi / 2) < 1e-12 and abs(p.phi - 3 * math.pi / 2) < 1e-12


class TestTrajectory:
    def test_z_advances_azimuth(self):
        theta, phi = 1.1, 0.4
        traj = sample_trajectory(catalog("Z"), qubit_from_angles(theta, phi), 21, 2.0)
        for t, p in zip(traj.times, traj.points):
            assert abs(p.theta - theta) < 1e-12
            assert angle_diff(p.phi, phi + math.pi * t) < 1e-12

    def test_z_maps_x0_to_x1(self):
        traj = sample_trajectory(catalog("Z"), qubit_from_angles(math.pi / 2, 0), 3, 1.0)
        p = traj.points[-1]
        assert abs(p.theta - math.pi / 2) < 1e-12 and abs(p.phi - math.pi) < 1e-12

    def test_x_quarter_turn(self):
        traj = sample_trajectory(catalog("X"), [1, 0], 3, 1.0)
        np.testing.assert_allclose(traj.points[1].cart, [0, -1, 0], atol=1e-12)

    def test_norm_and_times(self, rng):
        traj = sample_trajectory(catalog("H"), random_state(rng, 2), 50, 3.0)
        assert np.all(np.diff(traj.times) > 0)
        assert np.max(np.abs(np.linalg.norm(traj.states, axis=1) - 1)) < 1e-10

    def test_rejects_two_qubit_gate(self):
        with pytest.raises(DimensionMismatchError):
            sample_trajectory(catalog("CNOT"), [1, 0], 10, 1.0)

    def test_rejects_bad_sampling(self):
        with pytest.raises(ValueError):
            sample_trajectory(catalog("Z"), [1, 0], 1, 1.0)

    def test_csv(self):
        traj = sample_trajectory(catalog("Z"), qubit_from_angles(math.pi / 3, 0), 5, 2.0)
        rows = list(csv.reader(io.StringIO(traj.to_csv())))
        assert rows[0] == TRAJECTORY_HEADER
        assert len(rows) == 6
        assert all(len(r) == 11 for r in rows)
        # 17 significant digits round-trip exactly
        assert float(rows[2][0]) == traj.times[1]
        assert float(rows[2][-1]) == traj.imag_residue[1]


class TestLatitude:
    def test_z_about_pole(self, rng):
        traj = sample_trajectory(catalog("Z"), random_state(rng, 2), 200, 2.0)
        assert latitude_residual(traj, BlochPoint(0, 0)) < 1e-10

    def test_h_about_h0(self):
        traj = sample_trajectory(catalog("H"), [1, 0], 200, 2.0)
        axis = bloch_point(qubit_from_angles(math.pi / 4, 0))
        assert latitude_residual(traj, axis) < 1e-9

    def test_z_about_x_axis_positive(self):
        theta = 1.0
        traj = sample_trajectory(catalog("Z"), qubit_from_angles(theta, 0.3), 200, 2.0)
        # x-coordinate sweeps sin(theta) cos(phi): spread at least sin(theta) over a full turn
        assert latitude_residual(traj, BlochPoint(math.pi / 2, 0)) > math.sin(theta)

    @pytest.mark.parametrize("name", ["Z", "X", "Y", "H"])
    def test_invariance(self, name, rng):
        spec = catalog(name)
        axis = gate_axis(spec)
        for _ in range(20):
            traj = sample_trajectory(spec, random_state(rng, 2), 1000, 2.0)
            assert latitude_residual(traj, axis) < 1e-9

    def test_gate_axes(self):
        np.testing.assert_allclose(gate_axis(catalog("Z")).cart, [0, 0, 1], atol=1e-12)
        np.testing.assert_allclose(gate_axis(catalog("X")).cart, [1, 0, 0], atol=1e-12)
        np.testing.assert_allclose(gate_axis(catalog("Y")).cart, [0, 1, 0], atol=1e-12)
        np.testing.assert_allclose(gate_axis(catalog("H")).cart, [1 / SQ2, 0, 1 / SQ2], atol=1e-12)


class TestRebitDeviation:
    def test_real_state(self):
        assert rebit_deviation(np.array([1, 1]) / SQ2) == 0

    def test_plus_i_fine_grid(self):
        psi = np.array([1, 1j]) / SQ2
        chis = np.linspace(0, 2 * np.pi, 10**6, endpoint=False)
        grid = np.sqrt(np.min(np.sum(np.imag(np.exp(1j * chis)[:, None] * psi) ** 2, axis=1)))
        assert abs(grid - 1 / SQ2) < 1e-9
        assert abs(rebit_deviation(psi) - 1 / SQ2) < 1e-15

    def test_z_path_leaves_longitude(self):
        spec = catalog("Z")
        traj = sample_trajectory(spec, qubit_from_angles(math.pi / 2, 0), 101, 1.0)
        inner = traj.imag_residue[1:-1]
        assert np.all(inner > 0)
        assert traj.imag_residue[0] < 1e-15 and traj.imag_residue[-1] < 1e-12

    def test_global_phase_invariant(self, rng):
        psi = random_state(rng, 2)
        assert abs(rebit_deviation(psi) - rebit_deviation(np.exp(0.9j) * psi)) < 1e-12

    def test_closed_form_vs_oracle(self, rng):
        worst = 0.0
        for _ in range(1000):
            psi = random_state(rng, 2)
            worst = max(worst, abs(rebit_deviation(psi) - deviation_oracle(psi)))
        assert worst < 1e-6

    @pytest.mark.parametrize("name", ["Z", "X", "H"])
    @pytest.mark.parametrize("theta", [math.pi / 6, math.pi / 3, 2 * math.pi / 3])
    def test_departure_at_half_tau(self, name, theta):
        spec = catalog(name)
        traj = sample_trajectory(spec, qubit_from_angles(theta, 0), 3, 1.0)
        assert traj.imag_residue[1] > 1e-3
