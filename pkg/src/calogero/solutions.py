"""Distinguished solutions of omega^2 phi - phi'' + b phi / r^2 = 0.

``phi_decaying`` is normalized by e^{omega r} phi -> 1 at infinity (it is
sqrt(2 omega r / pi) K_{i nu}(omega r)); ``phi_growing`` shares its
r^{1/2 + i nu} boundary amplitude and has the r^{1/2 - i nu} amplitude
negated, which makes the rank-one resolvent algebra hold verbatim.  At
omega = i mu the two oscillatory solutions are produced by inward ODE
integration from asymptotic data, since the Bessel route would sit on
the argument boundary.
"""

from dataclasses import dataclass

import numpy as np

from . import _backend
from .errors import DomainError, FitWindowError, OverflowRangeError
from .radial import RadialFunction
from .special import alpha_coefficient, modified_pair_on_ray


@dataclass(frozen=True)
class SpectralOmega:
    """omega = mu e^{i xi} with mu > 0 and |xi| < pi/2, or xi = pi/2 exactly."""

    omega: complex
    mu: float
    xi: float

    @classmethod
    def from_omega(cls, omega):
        omega = complex(omega)
        mu = abs(omega)
        if mu == 0:
            raise DomainError("omega must be nonzero")
        xi = float(np.angle(omega))
        if not (abs(xi) < np.pi / 2 or xi == np.pi / 2):
            raise DomainError(f"omega must satisfy Re omega > 0 or omega = i mu, got {omega}")
        return cls(omega=omega, mu=mu, xi=xi)

    @classmethod
    def from_z(cls, z):
        """omega = sqrt(-z) with Re omega > 0, for a spectral parameter z off [0, inf)."""
        z = complex(z)
        if z.imag == 0.0 and z.real >= 0.0:
            raise DomainError(f"z must avoid [0, infinity), got {z}")
        return cls.from_omega(np.sqrt(-z))


@dataclass(frozen=True)
class BoundaryCoefficients:
    """Amplitudes of r^{1/2 +- i nu} in the r -> 0 expansion, with fit residual."""

    c_plus: complex
    c_minus: complex
    fit_residual: float


def boundary_amplitude(nu):
    """Boundary amplitude of phi_decaying: sqrt(pi/2)/sinh(pi nu) * alpha.

    With the e^{omega r} phi -> 1 normalization, r^{-1/2} phi_{omega,0} ->
    omega^{1/2} (A r^{i nu} omega^{i nu} + conj(A) omega^{-i nu} r^{-i nu})
    where A is this value.
    """
    a = alpha_coefficient(nu)
    return np.sqrt(np.pi / 2.0) / np.sinh(np.pi * nu) * a.value


def wronskian_exact(nu, omega):
    """Closed form W(omega) = 4 i nu omega |A|^2 = 2 i omega / sinh(pi nu)."""
    return 2j * complex(omega) / np.sinh(np.pi * nu)


def _as_points(r):
    arr = np.atleast_1d(np.asarray(r, dtype=float))
    if np.any(arr <= 0):
        raise DomainError("radii must be positive")
    return arr


def solution_pair(nu, omega, r, need_growing=True):
    """phi_0, phi_0', phi_1, phi_1' at the radii r for Re omega > 0.

    Derivatives are with respect to r.  Arrays follow the shape of r.
    """
    if nu <= 0:
        raise DomainError("nu must be positive")
    om = SpectralOmega.from_omega(omega)
    if not abs(om.xi) < np.pi / 2:
        raise DomainError("solution_pair needs Re omega > 0; use the oscillatory API")
    pts = _as_points(r)
    order = np.argsort(pts)
    ts = pts[order] * om.mu
    w0, w0d, v, vd = modified_pair_on_ray(nu, om.xi, ts, need_v=need_growing)
    inv = np.empty_like(order)
    inv[order] = np.arange(order.size)
    phi0 = w0[inv]
    phi0d = (om.omega * w0d)[inv]
    if need_growing:
        phi1 = v[inv]
        phi1d = (om.omega * vd)[inv]
    else:
        phi1 = phi1d = None
    return phi0, phi0d, phi1, phi1d


def phi_decaying(nu, omega, r):
    """Decaying solution, e^{omega r} phi -> 1; real for real omega."""
    phi0, _, _, _ = solution_pair(nu, omega, r, need_growing=False)
    return phi0 if np.ndim(r) else complex(phi0[0])


def phi_growing(nu, omega, r):
    """Growing solution; i phi is real for real omega.

    Raises OverflowRangeError once (Re omega) r exceeds the double
    exponent range rather than saturating.
    """
    om = SpectralOmega.from_omega(omega)
    pts = _as_points(r)
    if np.max(pts) * om.mu * np.cos(om.xi) > 690.0:
        raise OverflowRangeError("(Re omega) r beyond double range for the growing solution")
    _, _, phi1, _ = solution_pair(nu, omega, r, need_growing=True)
    return phi1 if np.ndim(r) else complex(phi1[0])


def _decaying_seed(b, omega_eff, r0, tol=1e-17):
    """(u, u') at r0 from the e^{-omega r} asymptotic series.

    u ~ e^{-omega r} sum a_k r^{-k}, a_0 = 1,
    a_{k+1} = a_k (b - k(k+1)) / (2 omega (k+1)); truncated at the first
    term below tol (the series is divergent; callers keep |2 omega r0|
    large enough, ~80, that machine accuracy is reachable).
    """
    a = 1.0 + 0j
    s = 1.0 + 0j
    sd = 0.0 + 0j
    rk = 1.0
    last = np.inf
    for k in range(0, 60):
        a_next = a * (b - k * (k + 1)) / (2.0 * omega_eff * (k + 1))
        rk_next = rk / r0
        term = a_next * rk_next
        if abs(term) >= last:
            break
        s += term
        sd += -(k + 1) * term / r0
        last = abs(term)
        a, rk = a_next, rk_next
        if abs(term) < tol:
            break
    e = np.exp(-omega_eff * r0)
    return e * s, e * (sd - omega_eff * s)


def phi_oscillatory_pair(nu, mu, r):
    """Both oscillatory solutions at omega = i mu with their r-derivatives.

    Kind 0 behaves like e^{+i mu r} (e^{-i mu r} phi -> 1, phi' ~ i mu
    e^{i mu r}); kind 1 like e^{-i mu r}.  Returns (phi0, phi0', phi1, phi1').
    """
    if nu <= 0 or mu <= 0:
        raise DomainError("need nu > 0 and mu > 0")
    pts = _as_points(r)
    b = -0.25 - nu * nu
    q0 = complex(b + 0.25)
    om2 = complex(-mu * mu)
    r_seed = max(40.0 / mu, 1.05 * float(np.max(pts)))
    order = np.argsort(pts)[::-1]
    xt = np.log(pts[order])
    x0 = np.log(r_seed)
    out = []
    for omega_eff in (-1j * mu, 1j * mu):
        u0, ud0 = _decaying_seed(b, omega_eff, r_seed)
        y0 = u0 * np.exp(-0.5 * x0)
        yp0 = np.exp(-0.5 * x0) * (r_seed * ud0 - 0.5 * u0)
        yy, yyp = _backend.integrate_radial(q0, om2, x0, xt[-1], y0, yp0, 1e-11, 1e-280, xt)
        ex = np.exp(0.5 * xt)
        uu = ex * yy
        uud = (yyp + 0.5 * yy) / ex
        inv = np.empty_like(order)
        inv[order] = np.arange(order.size)
        out.extend([uu[inv], uud[inv]])
    return tuple(out)


def phi_oscillatory(nu, mu, kind, r):
    """Oscillatory solution of kind 0 or 1 at omega = i mu."""
    if kind not in (0, 1):
        raise DomainError("kind must be 0 or 1")
    p0, _, p1, _ = phi_oscillatory_pair(nu, mu, r)
    val = p0 if kind == 0 else p1
    return val if np.ndim(r) else complex(val[0])


def wronskian(nu, omega, r_points=None, with_spread=False):
    """Wronskian phi_0 phi_1' - phi_0' phi_1, constant in r.

    Evaluated at several radii; the averaged value is returned, with the
    relative spread optionally alongside.
    """
    om = SpectralOmega.from_omega(omega)
    if r_points is None:
        r_points = np.array([0.5, 1.0, 2.0, 5.0]) / om.mu
    p0, p0d, p1, p1d = solution_pair(nu, omega, r_points)
    w = p0 * p1d - p0d * p1
    wm = complex(np.mean(w))
    spread = float(np.max(np.abs(w - wm)) / abs(wm))
    return (wm, spread) if with_spread else wm


def expected_boundary_pair(nu, omega):
    """(c_plus, c_minus) of phi_decaying: omega^{1/2}(A omega^{i nu}, conj(A) omega^{-i nu}).

    phi_growing carries the same pair with c_minus negated.
    """
    om = SpectralOmega.from_omega(omega)
    amp = boundary_amplitude(nu)
    lo = np.log(om.omega)
    half = np.exp(0.5 * lo)
    return (
        half * amp * np.exp(1j * nu * lo),
        half * np.conj(amp) * np.exp(-1j * nu * lo),
    )


def extract_boundary_coefficients(u, nu, window=None):
    """Least-squares fit of r^{-1/2} u(r) against {r^{i nu}, r^{-i nu}}.

    Parameters
    ----------
    u : RadialFunction
    nu : float
    window : (float, float), optional
        Fit window; defaults to [r0, 10 r0] with r0 the first grid point.

    Raises
    ------
    FitWindowError
        Fewer than 4 grid points in the window, or condition number of the
        design matrix above 1e8.
    """
    if not isinstance(u, RadialFunction):
        raise DomainError("u must be a RadialFunction")
    if nu <= 0:
        raise DomainError("nu must be positive")
    if window is None:
        window = (u.grid[0], 10.0 * u.grid[0])
    lo, hi = window
    sel = (u.grid >= lo * (1 - 1e-12)) & (u.grid <= hi * (1 + 1e-12))
    if np.count_nonzero(sel) < 4:
        raise FitWindowError("fewer than 4 grid points in the fitting window")
    r = u.grid[sel]
    y = u.values[sel] / np.sqrt(r)
    cols = np.stack([np.exp(1j * nu * np.log(r)), np.exp(-1j * nu * np.log(r))], axis=1)
    sv = np.linalg.svd(cols, compute_uv=False)
    if sv[-1] == 0 or sv[0] / sv[-1] > 1e8:
        raise FitWindowError(f"ill-conditioned fit window (cond={sv[0] / max(sv[-1], 1e-300):.2e})")
    coef, res, _, _ = np.linalg.lstsq(cols, y, rcond=None)
    misfit = cols @ coef - y
    rms = float(np.sqrt(np.mean(np.abs(misfit) ** 2)))
    return BoundaryCoefficients(c_plus=complex(coef[0]), c_minus=complex(coef[1]), fit_residual=rms)


def sample_decaying(nu, omega, grid):
    """phi_decaying sampled as a RadialFunction."""
    return RadialFunction(grid, phi_decaying(nu, omega, grid))


def sample_growing(nu, omega, grid):
    """phi_growing sampled as a RadialFunction."""
    return RadialFunction(grid, phi_growing(nu, omega, grid))
