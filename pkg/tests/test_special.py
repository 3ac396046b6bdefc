"""Gamma, imaginary-order Bessel, and alpha-coefficient contracts."""

import mpmath as mp
import numpy as np
import pytest
from scipy.integrate import quad

from calogero.errors import DomainError, PoleError
from calogero.special import (
    alpha_coefficient,
    bessel_i_imag_order,
    bessel_k_imag_order,
    complex_gamma,
    coupling,
    k_imag_with_derivative,
)

mp.mp.dps = 40

# frozen from the independent quadrature oracle below (and consistent with it
# at every run); see test_k_matches_integral_representation
K_I1_AT_1 = 0.28942803702599212


def mp_k(nu, z):
    return complex(mp.besselk(mp.mpc(0, nu), mp.mpc(z.real, z.imag)))


class TestComplexGamma:
    def test_identity_values(self):
        assert complex_gamma(1.0) == pytest.approx(1.0, rel=1e-14)
        assert complex_gamma(0.5) == pytest.approx(np.sqrt(np.pi), rel=1e-14)

    def test_modulus_identity_at_1_plus_i(self):
        # |Gamma(1+i)|^2 = pi/sinh(pi), right side via a high-precision oracle
        rhs = float(mp.pi / mp.sinh(mp.pi))
        g = complex_gamma(1 + 1j)
        assert abs(g) ** 2 == pytest.approx(rhs, rel=1e-13)

    def test_accuracy_against_mpmath_disk(self):
        rng = np.random.default_rng(7)
        worst = 0.0
        for _ in range(200):
            z = complex(rng.uniform(-80, 80), rng.uniform(-80, 80))
            if abs(z) > 100 or abs(z) < 1e-2:
                continue
            if z.imag == 0 and z.real <= 0:
                continue
            ref = complex(mp.gamma(mp.mpc(z.real, z.imag)))
            worst = max(worst, abs(complex_gamma(z) - ref) / abs(ref))
        assert worst <= 1e-13

    @pytest.mark.parametrize("z", [0.0, -1.0, -2.0, -17.0])
    def test_pole_rejection(self, z):
        with pytest.raises(PoleError):
            complex_gamma(z)

    def test_reflection_identity(self):
        rng = np.random.default_rng(11)
        for _ in range(100):
            z = complex(rng.uniform(-20, 20), rng.uniform(-20, 20))
            if abs(z.imag) < 1e-3 and abs(z.real - round(z.real)) < 1e-3:
                continue
            lhs = complex_gamma(z) * complex_gamma(1 - z) * np.sin(np.pi * z) / np.pi
            assert abs(lhs - 1.0) < 1e-10


class TestBesselK:
    def test_real_on_positive_axis(self):
        for x in (0.5, 1.0, 2.0):
            k = bessel_k_imag_order(1.0, x)
            assert abs(k.imag) < 1e-12 * abs(k)

    def test_k_matches_integral_representation(self):
        # independent oracle: K_{i nu}(x) = int_0^inf e^{-x cosh t} cos(nu t) dt
        val, est = quad(
            lambda t: np.exp(-np.cosh(t)) * np.cos(t), 0, 30, epsabs=1e-15, limit=300
        )
        assert val == pytest.approx(K_I1_AT_1, abs=1e-13)
        assert bessel_k_imag_order(1.0, 1.0).real == pytest.approx(K_I1_AT_1, rel=1e-10)

    def test_exponential_decay_rate_at_50(self):
        # the measured decay exponent agrees with 1 to 1e-3 (the raw ratio
        # carries the a1/z = -1.25e-2 first correction, see also below)
        k = bessel_k_imag_order(1.0, 50.0)
        ratio = k.real / (np.sqrt(np.pi / 100.0) * np.exp(-50.0))
        rate = -np.log(k.real / np.sqrt(np.pi / 100.0)) / 50.0
        assert abs(rate - 1.0) < 1e-3
        a1 = -(4.0 * 1.0 + 1.0) / 8.0
        assert ratio == pytest.approx(1.0 + a1 / 50.0, abs=1e-3)

    def test_oscillation_free_beyond_turning_point(self):
        for nu in (0.5, 1.0, 3.0):
            for x in np.geomspace(nu, 60.0, 25):
                k = bessel_k_imag_order(nu, float(x))
                assert abs(k.imag) < 1e-12 * abs(k)

    def test_connection_identity_log_grid(self):
        # K = pi (I_{-i nu} - I_{i nu}) / (2 sin(i nu pi)); the right side is
        # evaluated in high precision because the double-precision difference
        # of I's mathematically loses ~e^{2z} eps near z = 10.
        nu = 1.0
        for z in np.geomspace(0.01, 10.0, 17):
            zm = mp.mpf(float(z))
            rhs = complex(
                mp.pi
                * (mp.besseli(mp.mpc(0, -nu), zm) - mp.besseli(mp.mpc(0, nu), zm))
                / (2 * mp.sin(mp.mpc(0, nu) * mp.pi))
            )
            k = bessel_k_imag_order(nu, float(z))
            assert abs(k - rhs) <= 1e-8 * abs(rhs)

    def test_connection_identity_point(self):
        nu, z = 1.0, 2.0
        zm = mp.mpf(z)
        rhs = complex(
            mp.pi
            * (mp.besseli(mp.mpc(0, -nu), zm) - mp.besseli(mp.mpc(0, nu), zm))
            / (2 * mp.sin(mp.mpc(0, nu) * mp.pi))
        )
        assert abs(bessel_k_imag_order(nu, z) - rhs) <= 1e-9 * abs(rhs)

    def test_crossover_band_accuracy(self):
        # the series/asymptotic gap is covered by ODE continuation; verify
        # the 1e-10 contract precisely there
        for nu in (0.5, 1.0, 2.0):
            for t in (6.0, 8.0, 10.0, 12.0):
                for psi in (0.0, 0.9, -1.2):
                    z = t * np.exp(1j * psi)
                    ref = mp_k(nu, z)
                    got = bessel_k_imag_order(nu, complex(z))
                    assert abs(got - ref) <= 1e-10 * abs(ref)

    def test_derivative_against_mpmath(self):
        for nu, z in [(1.0, 2.0 + 1.0j), (0.5, 9.0), (2.0, 30.0 + 5.0j)]:
            _, kd = k_imag_with_derivative(nu, complex(z))
            ref = complex(
                mp.diff(lambda w: mp.besselk(mp.mpc(0, nu), w), mp.mpc(z.real, z.imag))
            )
            assert abs(kd - ref) <= 1e-9 * abs(ref)

    def test_domain_errors(self):
        with pytest.raises(DomainError):
            bessel_k_imag_order(1.0, -1.0)
        with pytest.raises(DomainError):
            bessel_k_imag_order(1.0, 1j)
        with pytest.raises(DomainError):
            bessel_k_imag_order(-1.0, 1.0)


class TestBesselI:
    def test_small_z_leading_term(self):
        # I_{i nu}(z) z^{-i nu} -> 2^{-i nu}/Gamma(1+i nu) as z -> 0
        nu = 1.3
        z = 1e-6 * np.exp(0.4j)
        lead = bessel_i_imag_order(nu, complex(z)) * np.exp(-1j * nu * np.log(z))
        expected = 2.0 ** (-1j * nu) / complex_gamma(1 + 1j * nu)
        assert abs(lead - expected) <= 1e-10 * abs(expected)

    def test_conjugation_symmetry(self):
        x = 3.0
        for nu in (0.7, 1.0, 2.5):
            ip = bessel_i_imag_order(nu, x, +1)
            im = bessel_i_imag_order(nu, x, -1)
            assert abs(np.conj(ip) - im) <= 1e-12 * abs(im)

    def test_against_mpmath(self):
        for nu in (0.5, 2.0):
            for z in (0.3, 2.0 + 1.0j, 8.0 - 3.0j):
                for s in (+1, -1):
                    got = bessel_i_imag_order(nu, complex(z), s)
                    ref = complex(
                        mp.besseli(mp.mpc(0, s * nu), mp.mpc(complex(z).real, complex(z).imag))
                    )
                    assert abs(got - ref) <= 1e-12 * abs(ref)

    def test_connection_residual_within_contract(self):
        # our I's recombined in double precision satisfy the identity to
        # 1e-9 relative to K wherever that is achievable (|z| <= 6 here;
        # beyond, cancellation makes the double-precision residual
        # mathematically larger, see test_connection_identity_log_grid)
        nu = 1.0
        pfac = -0.5j * np.pi / np.sinh(np.pi * nu)
        for z in (0.05, 0.5, 2.0, 2.0 + 2.0j, 6.0):
            z = complex(z)
            rhs = pfac * (bessel_i_imag_order(nu, z, -1) - bessel_i_imag_order(nu, z, +1))
            ref = mp_k(nu, z)
            assert abs(rhs - ref) <= 1e-9 * abs(ref)

    def test_overflow_rejection(self):
        from calogero.errors import OverflowRangeError

        with pytest.raises(OverflowRangeError):
            bessel_i_imag_order(1.0, 400.0)


class TestAlphaCoefficient:
    def test_small_nu_limit(self):
        assert abs(alpha_coefficient(1e-3).eta - np.pi / 2) < 0.02

    def test_large_nu_asymptotics(self):
        nu = 50.0
        eta = alpha_coefficient(nu).eta
        pred = -nu * np.log(nu) + (1 - np.log(2)) * nu + np.pi / 4
        dev = (eta - pred + np.pi) % (2 * np.pi) - np.pi
        assert abs(dev) < 0.05

    def test_explicit_value_at_1(self):
        a = alpha_coefficient(1.0)
        expected = 2.0 ** (-1j) * 1j / complex_gamma(1 + 1j)
        assert a.value == pytest.approx(expected, rel=1e-13)
        assert a.eta == pytest.approx(np.angle(expected))
        assert a.modulus == pytest.approx(abs(expected))
        assert -np.pi < a.eta <= np.pi

    def test_eta_continuity(self):
        delta = 1e-4
        nus = np.geomspace(0.1, 10.0, 60)
        for nu in nus:
            e1 = alpha_coefficient(float(nu)).eta
            e2 = alpha_coefficient(float(nu) + delta).eta
            d = (e2 - e1 + np.pi) % (2 * np.pi) - np.pi
            # |d eta/d nu| = |log(nu/2) + Re psi(1+i nu)| stays modest on [0.1, 10]
            assert abs(d) <= 6.0 * delta

    def test_rejects_nonpositive_nu(self):
        with pytest.raises(DomainError):
            alpha_coefficient(0.0)


class TestCoupling:
    def test_roundtrip(self):
        c = coupling(b=-5.0)
        assert c.nu == pytest.approx(np.sqrt(4.75), rel=1e-15)
        assert c.nu**2 + 0.25 + c.b == pytest.approx(0.0, abs=1e-14)
        c2 = coupling(nu=c.nu)
        assert c2.b == pytest.approx(c.b, rel=1e-14)

    def test_rejects_subcritical(self):
        with pytest.raises(DomainError):
            coupling(b=-0.25)
        with pytest.raises(DomainError):
            coupling(b=1.0)
        with pytest.raises(DomainError):
            coupling(b=-1.0, nu=1.0)
