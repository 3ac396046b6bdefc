"""Distinguished solutions: normalization, asymptotics, Wronskian, boundary fits."""

import numpy as np
import pytest

from calogero.errors import DomainError, FitWindowError, OverflowRangeError
from calogero.oracle import ode_residual
from calogero.radial import RadialFunction, log_grid
from calogero.solutions import (
    boundary_amplitude,
    expected_boundary_pair,
    extract_boundary_coefficients,
    phi_decaying,
    phi_growing,
    phi_oscillatory,
    phi_oscillatory_pair,
    sample_decaying,
    sample_growing,
    solution_pair,
    wronskian,
    wronskian_exact,
)


class TestDecaying:
    def test_infinity_normalization(self):
        # |e^r phi - 1| at r = 20 is the first asymptotic correction
        # (4 nu^2 + 1)/(8 * 2 * 20); below 1e-2 for small nu
        nu = 0.3
        r = 20.0
        val = phi_decaying(nu, 1.0, r)
        assert abs(np.exp(r) * val - 1.0) < 1e-2
        # at nu = 1 the correction is a1/r = -5/(8 r); check against it
        nu = 1.0
        val = phi_decaying(nu, 1.0, r)
        a1 = -(4.0 * nu**2 + 1.0) / 8.0
        assert np.exp(r) * val == pytest.approx(1.0 + a1 / r, abs=2e-3)

    def test_real_for_real_omega(self):
        r = np.geomspace(0.01, 15.0, 40)
        vals = phi_decaying(1.0, 1.0, r)
        assert np.max(np.abs(vals.imag)) == 0.0

    def test_boundary_asymptotics(self):
        # r^{-1/2} phi at r = 1e-5, omega = 2 e^{i pi/6} against the two-term model
        nu, mu, xi = 1.0, 2.0, np.pi / 6.0
        om = mu * np.exp(1j * xi)
        r = 1e-5
        amp = boundary_amplitude(nu)
        model = (
            np.sqrt(mu)
            * np.exp(1j * xi / 2.0)
            * (
                amp * mu ** (1j * nu) * np.exp(-xi * nu) * r ** (1j * nu)
                + np.conj(amp) * mu ** (-1j * nu) * np.exp(xi * nu) * r ** (-1j * nu)
            )
        )
        got = phi_decaying(nu, om, r) * r**-0.5
        assert abs(got - model) < 1e-4 * abs(model)

    def test_ode_residual(self):
        for nu, om in [(0.5, 1.0), (1.0, 2.0 * np.exp(0.5j)), (5.0, 0.7 * np.exp(-1.1j))]:
            r = np.geomspace(1e-3, 8.0 / abs(om), 12)
            res = ode_residual(lambda rr: phi_decaying(nu, om, rr), -0.25 - nu**2, om**2, r)
            assert np.max(res) < 1e-7

    def test_conjugation_symmetry(self):
        nu = 1.4
        om = 1.5 * np.exp(0.7j)
        r = np.geomspace(0.05, 5.0, 12)
        a = phi_decaying(nu, np.conj(om), r)
        b = np.conj(phi_decaying(nu, om, r))
        assert np.max(np.abs(a - b)) <= 1e-10 * np.max(np.abs(b))

    def test_domain_errors(self):
        with pytest.raises(DomainError):
            phi_decaying(-1.0, 1.0, 1.0)
        with pytest.raises(DomainError):
            phi_decaying(1.0, -2.0, 1.0)
        with pytest.raises(DomainError):
            phi_decaying(1.0, 1.0, -1.0)


class TestGrowing:
    def test_boundary_pair_negated(self):
        nu, om = 1.0, 1.5
        grid = log_grid(1e-6, 1e-4, 64)
        bc = extract_boundary_coefficients(sample_growing(nu, om, grid), nu)
        cp, cm = expected_boundary_pair(nu, om)
        assert bc.c_plus == pytest.approx(cp, rel=1e-8)
        assert bc.c_minus == pytest.approx(-cm, rel=1e-8)
        # ratio form: c-/c+ = -(conj a / a) mu^{-2 i nu} e^{2 xi nu}
        assert bc.c_minus / bc.c_plus == pytest.approx(-cm / cp, rel=1e-8)

    def test_purely_imaginary_for_real_omega(self):
        r = np.geomspace(0.05, 10.0, 30)
        vals = phi_growing(1.0, 1.0, r)
        assert np.max(np.abs(vals.real)) == 0.0

    def test_exponential_growth_band(self):
        nu, om = 1.0, 1.0
        r = np.linspace(20.0, 40.0, 9)
        scaled = np.abs(phi_growing(nu, om, r)) * np.exp(-r)
        # bounded band [C, C'], tight around the limit 1/sinh(pi nu)
        lim = 1.0 / np.sinh(np.pi * nu)
        assert np.all(scaled > 0.5 * lim) and np.all(scaled < 2.0 * lim)
        assert np.max(scaled) / np.min(scaled) < 1.1

    def test_overflow_reported(self):
        with pytest.raises(OverflowRangeError):
            phi_growing(1.0, 1.0, 800.0)


class TestOscillatory:
    def test_outgoing_normalization(self):
        mu, r = 1.0, 100.0
        val = phi_oscillatory(1.0, mu, 0, r)
        assert abs(np.exp(-1j * mu * r) * val - 1.0) < 1e-2

    def test_incoming_normalization(self):
        mu, r = 2.0, 60.0
        val = phi_oscillatory(1.0, mu, 1, r)
        assert abs(np.exp(1j * mu * r) * val - 1.0) < 1e-2

    def test_pair_wronskian_constant(self):
        nu, mu = 1.0, 1.0
        r = np.geomspace(1.0, 50.0, 25)
        p0, p0d, p1, p1d = phi_oscillatory_pair(nu, mu, r)
        w = p0 * p1d - p0d * p1
        wm = np.mean(w)
        assert abs(wm) > 0.1
        assert np.max(np.abs(w - wm)) < 1e-8 * abs(wm)
        # asymptotically phi0 ~ e^{i mu r}, phi1 ~ e^{-i mu r} force W = -2 i mu
        assert wm == pytest.approx(-2j * mu, rel=1e-6)

    def test_ode_residual(self):
        nu, mu = 1.0, 1.0
        r = np.geomspace(0.5, 30.0, 10)
        res = ode_residual(
            lambda rr: phi_oscillatory(nu, mu, 0, rr), -0.25 - nu**2, -(mu**2), r
        )
        assert np.max(res) < 1e-7


class TestWronskian:
    @pytest.mark.parametrize("omega", [1.0, 2.0, 1.3 * np.exp(0.4j), 0.2 * np.exp(-1.1j)])
    def test_r_independence(self, omega):
        w, spread = wronskian(1.0, omega, with_spread=True)
        assert spread < 1e-9

    def test_purely_imaginary_for_real_omega(self):
        for om in (0.5, 1.0, 3.0):
            w = wronskian(1.0, om)
            assert abs(w.real) <= 1e-10 * abs(w)

    def test_closed_form(self):
        # W = 4 i nu omega |A|^2 with A the decaying boundary amplitude,
        # i.e. 2 i omega / sinh(pi nu)
        for nu in (0.5, 1.0, 2.0):
            for om in (1.0, 1.7 * np.exp(0.9j)):
                w = wronskian(nu, om)
                amp = boundary_amplitude(nu)
                assert w == pytest.approx(4j * nu * om * abs(amp) ** 2, rel=1e-8)
                assert w == pytest.approx(wronskian_exact(nu, om), rel=1e-8)

    def test_finite_difference_cross_check(self):
        # independent route: 4th-order finite differences (h = 1e-4 r)
        nu, om = 1.0, 1.2 * np.exp(0.3j)
        r = 1.5
        h = 1e-4 * r
        st = np.array([r - 2 * h, r - h, r, r + h, r + 2 * h])
        p0 = phi_decaying(nu, om, st)
        p1 = phi_growing(nu, om, st)
        d0 = (p0[0] - 8 * p0[1] + 8 * p0[3] - p0[4]) / (12 * h)
        d1 = (p1[0] - 8 * p1[1] + 8 * p1[3] - p1[4]) / (12 * h)
        w_fd = p0[2] * d1 - d0 * p1[2]
        assert w_fd == pytest.approx(wronskian_exact(nu, om), rel=1e-7)


class TestBoundaryExtraction:
    def test_exact_model_member(self):
        nu = 1.0
        grid = log_grid(1e-6, 1e-3, 80)
        u = RadialFunction(grid, grid**0.5 * np.exp(1j * nu * np.log(grid)))
        bc = extract_boundary_coefficients(u, nu)
        assert abs(bc.c_plus - 1.0) < 1e-12
        assert abs(bc.c_minus) < 1e-12
        assert bc.fit_residual < 1e-12

    def test_decaying_solution_pair(self):
        nu = 1.0
        om = 2.0 * np.exp(1j * np.pi / 6)
        grid = log_grid(1e-6, 1e-3, 80)
        bc = extract_boundary_coefficients(sample_decaying(nu, om, grid), nu)
        cp, cm = expected_boundary_pair(nu, om)
        assert bc.c_plus == pytest.approx(cp, rel=1e-7)
        assert bc.c_minus == pytest.approx(cm, rel=1e-7)

    def test_scale_consistency(self):
        # extracting from u(s .) multiplies the pair by (s^{1/2+i nu}, s^{1/2-i nu})
        nu, om, s = 1.0, 1.0, 2.5
        grid = log_grid(1e-6, 1e-3, 80)
        u = sample_decaying(nu, om, grid)
        us = RadialFunction(grid, phi_decaying(nu, om, s * grid))
        b0 = extract_boundary_coefficients(u, nu)
        b1 = extract_boundary_coefficients(us, nu)
        fac_p = s ** (0.5 + 1j * nu)
        fac_m = s ** (0.5 - 1j * nu)
        assert b1.c_plus == pytest.approx(b0.c_plus * fac_p, rel=1e-8)
        assert b1.c_minus == pytest.approx(b0.c_minus * fac_m, rel=1e-8)

    def test_window_errors(self):
        nu = 1.0
        grid = log_grid(1e-6, 1.0, 10)
        u = RadialFunction(grid, np.sqrt(grid))
        with pytest.raises(FitWindowError):
            extract_boundary_coefficients(u, nu)  # only 1 point in [r0, 10 r0]


class TestSerialization:
    def test_csv_roundtrip(self, tmp_path):
        nu, om = 1.0, 1.0 + 0.5j
        grid = log_grid(1e-4, 10.0, 50)
        u = sample_decaying(nu, om, grid)
        path = tmp_path / "u.csv"
        u.to_csv(path)
        v = RadialFunction.from_csv(path)
        assert np.array_equal(u.grid, v.grid)
        assert np.array_equal(u.values, v.values)
        header = path.read_text().splitlines()[0]
        assert header == "r,re,im"

    def test_linear_independence_all_tested_omegas(self):
        rng = np.random.default_rng(3)
        for _ in range(10):
            nu = rng.uniform(0.3, 3.0)
            om = rng.uniform(0.3, 3.0) * np.exp(1j * rng.uniform(-1.3, 1.3))
            assert abs(wronskian(nu, om, r_points=np.array([1.0, 2.0]) / abs(om))) > 0
