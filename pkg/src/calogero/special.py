"""Complex gamma, modified Bessel functions of imaginary order, and the
boundary-phase coefficient alpha.

Everything downstream (solutions, spectra, resolvents) reduces to
K_{i nu}(z) and I_{+-i nu}(z) on rays in the right half-plane.  Evaluation
strategy per point, following the series/asymptotic split with a crossover
region:

* ascending series (DLMF 10.25.2) where its self-reported cancellation
  estimate is below ~1e-11,
* the large-z expansion (DLMF 10.40.2) where its smallest term is below
  ~1e-11,
* in the crossover band, stable ODE continuation along the ray, seeded by
  the asymptotic expansion at a radius where it is good to ~1e-12 and
  integrated inward (the K-direction is the stable one; the growing
  combination is continued outward from the series).
"""

from dataclasses import dataclass

import numpy as np

from . import _backend
from .errors import DomainError, OverflowRangeError, PoleError

_KTOL = 2e-11
_SEED_TOL = 3e-12


@dataclass(frozen=True)
class CouplingNu:
    """Inverse-square coupling b < -1/4 and the derived order nu = sqrt(-1/4 - b)."""

    b: float
    nu: float

    def __post_init__(self):
        if not self.b < -0.25:
            raise DomainError(f"coupling must satisfy b < -1/4, got b={self.b}")
        if not self.nu > 0:
            raise DomainError(f"nu must be positive, got {self.nu}")
        if abs(self.nu**2 + 0.25 + self.b) > 1e-12 * max(1.0, abs(self.b)):
            raise DomainError("inconsistent (b, nu) pair")

    @classmethod
    def from_b(cls, b):
        b = float(b)
        if not b < -0.25:
            raise DomainError(f"coupling must satisfy b < -1/4, got b={b}")
        return cls(b=b, nu=float(np.sqrt(-0.25 - b)))

    @classmethod
    def from_nu(cls, nu):
        nu = float(nu)
        if not nu > 0:
            raise DomainError(f"nu must be positive, got {nu}")
        return cls(b=-0.25 - nu * nu, nu=nu)


def coupling(b=None, nu=None):
    """Build a CouplingNu from exactly one of b or nu."""
    if (b is None) == (nu is None):
        raise DomainError("supply exactly one of b, nu")
    return CouplingNu.from_b(b) if b is not None else CouplingNu.from_nu(nu)


@dataclass(frozen=True)
class AlphaCoefficient:
    """Boundary-phase coefficient alpha = 2^{-i nu} i / Gamma(1 + i nu).

    The overall positive constant in front is a free normalization fixed
    to 1 here; every exported quantity uses only arg(alpha) or ratios in
    which the constant cancels.
    """

    value: complex
    eta: float
    modulus: float


def complex_gamma(z):
    """Gamma(z) for complex z off the poles.

    Lanczos sum for Re z >= 1/2, reflection otherwise; relative error
    ~1e-14 on |z| <= 100.

    Raises
    ------
    PoleError
        If z is a nonpositive integer.
    """
    z = complex(z)
    if z.imag == 0.0 and z.real <= 0.0 and z.real == np.floor(z.real):
        raise PoleError(f"gamma pole at z={z}")
    return complex(_backend.gamma_cx(z))


def alpha_coefficient(nu):
    """Alpha with normalization constant 1, its argument eta, and modulus."""
    nu = float(nu)
    if nu <= 0:
        raise DomainError("nu must be positive")
    value = 2.0 ** (-1j * nu) * 1j / complex_gamma(1.0 + 1j * nu)
    return AlphaCoefficient(value=value, eta=float(np.angle(value)), modulus=abs(value))


def _require_right_half_plane(z):
    z = complex(z)
    if not z.real > 0:
        raise DomainError(f"argument must satisfy Re z > 0, got {z}")
    return z


def bessel_i_imag_order(nu, z, sign=+1):
    """I_{+i nu}(z) (sign=+1) or I_{-i nu}(z) (sign=-1) by ascending series.

    Valid for Re z > 0; the series is used throughout its double-precision
    validity and an overflow error is raised beyond |z| = 340 where the
    peak term approaches the exponent range.
    """
    z = _require_right_half_plane(z)
    if nu <= 0:
        raise DomainError("nu must be positive")
    if sign not in (+1, -1):
        raise DomainError("sign must be +1 or -1")
    if abs(z) > 340.0:
        raise OverflowRangeError(f"|z|={abs(z):.3g} beyond ascending-series validity")
    ip, _, im, _, _, _ = _backend.i_pair_many(nu, np.array([z]))
    return complex(ip[0] if sign > 0 else im[0])


def bessel_k_imag_order(nu, z):
    """K_{i nu}(z) for Re z > 0, relative accuracy target 1e-10."""
    k, _ = k_imag_with_derivative(nu, z)
    return k


def k_imag_with_derivative(nu, z):
    """K_{i nu}(z) and dK/dz together (same dispatch, one evaluation)."""
    z = _require_right_half_plane(z)
    if nu <= 0:
        raise DomainError("nu must be positive")
    t = abs(z)
    psi = float(np.angle(z))
    w0, w0d, _, _ = modified_pair_on_ray(nu, psi, np.array([t]), need_v=False)
    root = np.sqrt(2.0 * z / np.pi)
    k = complex(w0[0]) / root
    kd = (complex(w0d[0]) - k * root / (2.0 * z)) / root
    return complex(k), complex(kd)


def _seed_radius(nu, psi, t_lo_needed):
    """Smallest radius (>= t_lo_needed) where the K-asymptotics is ~1e-12."""
    t = max(16.0, 1.15 * nu * nu + 10.0, t_lo_needed)
    for _ in range(40):
        z = t * np.exp(1j * psi)
        _, _, err = _backend.k_asym_many(nu, np.array([z]))
        if err[0] <= _SEED_TOL:
            return t
        t *= 1.25
    raise DomainError(f"no asymptotic seed radius found for nu={nu}")


def modified_pair_on_ray(nu, psi, ts, need_v=True):
    """Normalized solution pair w0, v and z-derivatives on the ray arg z = psi.

    w0(z) = sqrt(2z/pi) K_{i nu}(z) is the solution of
    w'' = (1 + b/z^2) w, b = -1/4 - nu^2, with e^z w0(z) -> 1; v shares
    its z^{1/2 + i nu} boundary amplitude and has the z^{1/2 - i nu}
    amplitude negated, v = -sqrt(2z/pi) pi (I_{i nu} + I_{-i nu})
    / (2 sin(i nu pi)).

    Parameters
    ----------
    nu : float
        Positive order parameter.
    psi : float
        Ray angle, |psi| < pi/2.
    ts : array of float
        Radii |z| along the ray, strictly positive.
    need_v : bool
        Skip the growing combination when False (returns None, None).

    Returns
    -------
    (w0, w0d, v, vd) : complex arrays; derivatives are with respect to z.
    """
    if nu <= 0:
        raise DomainError("nu must be positive")
    if not abs(psi) < np.pi / 2:
        raise DomainError(f"ray angle must satisfy |psi| < pi/2, got {psi}")
    ts = np.asarray(ts, dtype=float)
    if ts.size == 0:
        empty = np.empty(0, dtype=complex)
        return empty, empty.copy(), empty.copy(), empty.copy()
    if np.any(ts <= 0):
        raise DomainError("radii must be positive")
    eip = np.exp(1j * psi)
    zs = ts * eip

    if np.max(ts) * np.cos(psi) > 690.0:
        raise OverflowRangeError("(Re z) beyond double exponent range on this ray")

    w0 = np.empty(ts.shape, dtype=complex)
    w0d = np.empty(ts.shape, dtype=complex)
    v = np.empty(ts.shape, dtype=complex) if need_v else None
    vd = np.empty(ts.shape, dtype=complex) if need_v else None

    root = np.sqrt(2.0 * zs / np.pi)
    pfac = -0.5j * np.pi / np.sinh(np.pi * nu)

    # --- ascending series wherever it can plausibly reach _KTOL
    try_cut = min(45.0, (12.0 + 1.9 * nu) / (1.0 + np.cos(psi)) + 1.0)
    ser = ts <= try_cut
    k_ok = np.zeros(ts.shape, dtype=bool)
    v_ok = np.zeros(ts.shape, dtype=bool)
    if ser.any():
        ip, ipd, im, imd, err_diff, err_sum = _backend.i_pair_many(nu, zs[ser])
        kk = pfac * (im - ip)
        kkd = pfac * (imd - ipd)
        idx = np.nonzero(ser)[0]
        good = err_diff <= _KTOL
        gi = idx[good]
        w0[gi] = (root[gi]) * kk[good]
        w0d[gi] = kk[good] * root[gi] / (2.0 * zs[gi]) + root[gi] * kkd[good]
        k_ok[gi] = True
        if need_v:
            sv = -root[idx] * pfac * (ip + im)
            svd = sv / (2.0 * zs[idx]) - root[idx] * pfac * (ipd + imd)
            goodv = err_sum <= _KTOL
            gv = idx[goodv]
            v[gv] = sv[goodv]
            vd[gv] = svd[goodv]
            v_ok[gv] = True

    # --- large-z expansion
    rem_k = ~k_ok
    if rem_k.any():
        cand = rem_k & (ts >= 11.0)
        if cand.any():
            kk, kkd, err = _backend.k_asym_many(nu, zs[cand])
            idx = np.nonzero(cand)[0]
            good = err <= _KTOL
            gi = idx[good]
            w0[gi] = root[gi] * kk[good]
            w0d[gi] = kk[good] * root[gi] / (2.0 * zs[gi]) + root[gi] * kkd[good]
            k_ok[gi] = True
    if need_v:
        rem_v = ~v_ok
        if rem_v.any():
            cand = rem_v & (ts >= 11.0)
            if cand.any():
                vv, vvd, err = _backend.v_asym_many(nu, zs[cand])
                idx = np.nonzero(cand)[0]
                good = err <= _KTOL
                gv = idx[good]
                v[gv] = vv[good]
                vd[gv] = vvd[good]
                v_ok[gv] = True

    # --- crossover band: ODE continuation along the ray (log radius)
    q0 = complex(-nu * nu)
    om2 = eip * eip
    rem_k = ~k_ok
    if rem_k.any():
        t_rem = ts[rem_k]
        t_hi = _seed_radius(nu, psi, np.max(t_rem) * 1.02)
        z_hi = t_hi * eip
        kk, kkd, _ = _backend.k_asym_many(nu, np.array([z_hi]))
        rr = np.sqrt(2.0 * z_hi / np.pi)
        u_hi = rr * kk[0]
        ud_hi = (kk[0] * rr / (2.0 * z_hi) + rr * kkd[0]) * eip  # du/dt
        if u_hi == 0:
            raise OverflowRangeError("asymptotic seed underflowed")
        x_hi = np.log(t_hi)
        y0 = u_hi * np.exp(-0.5 * x_hi)
        yp0 = np.exp(-0.5 * x_hi) * (t_hi * ud_hi - 0.5 * u_hi)
        order = np.argsort(t_rem)[::-1]
        xt = np.log(t_rem[order])
        yy, yyp = _backend.integrate_radial(
            q0, om2, x_hi, xt[-1], y0, yp0, 3e-12, 1e-280, xt
        )
        ex = np.exp(0.5 * xt)
        uu = ex * yy
        uud = (yyp + 0.5 * yy) / ex
        gi = np.nonzero(rem_k)[0][order]
        w0[gi] = uu
        w0d[gi] = uud / eip
    if need_v:
        rem_v = ~v_ok
        if rem_v.any():
            t_rem = ts[rem_v]
            t_lo = min(8.0, 0.9 * np.min(t_rem))
            z_lo = np.array([t_lo * eip])
            ip, ipd, im, imd, _, err_sum = _backend.i_pair_many(nu, z_lo)
            if err_sum[0] > _KTOL:
                raise DomainError("no reliable inner seed for the growing solution")
            rr = np.sqrt(2.0 * z_lo[0] / np.pi)
            u_lo = -rr * pfac * (ip[0] + im[0])
            ud_lo = (u_lo / (2.0 * z_lo[0]) - rr * pfac * (ipd[0] + imd[0])) * eip
            x_lo = np.log(t_lo)
            y0 = u_lo * np.exp(-0.5 * x_lo)
            yp0 = np.exp(-0.5 * x_lo) * (t_lo * ud_lo - 0.5 * u_lo)
            order = np.argsort(t_rem)
            xt = np.log(t_rem[order])
            yy, yyp = _backend.integrate_radial(
                q0, om2, x_lo, xt[-1], y0, yp0, 3e-12, 1e-280, xt
            )
            ex = np.exp(0.5 * xt)
            uu = ex * yy
            uud = (yyp + 0.5 * yy) / ex
            gv = np.nonzero(rem_v)[0][order]
            v[gv] = uu
            vd[gv] = uud / eip
    return w0, w0d, v, vd
