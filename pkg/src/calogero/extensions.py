"""The projective family L_A: classification, spectrum, adjoint, scaling.

Each extension is labeled by A = (a1, a2) in C^2 minus the origin, up to a
common nonzero factor: the domain consists of functions behaving like
C (a1 r^{1/2 + i nu} + a2 r^{1/2 - i nu}) at the origin.  Everything here
is elementary arithmetic on |kappa| = |a2|/|a1| and the phase lattice of
the eigenvalue equation; the heavy analysis lives in ``solutions`` /
``resolvent`` / ``oracle``.
"""

import json
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError, GridResolutionError
from .radial import RadialFunction
from .solutions import phi_oscillatory_pair
from .special import alpha_coefficient

CASE_SELFADJOINT = "I"
CASE_NONGENERATING = "II"
CASE_SECTOR = "III"
CASE_FULL_ANGLE = "IV"

_PROJ_TOL = 1e-12


@dataclass(frozen=True)
class ExtensionParams:
    """Projective boundary pair, stored with its largest entry scaled to 1."""

    a1: complex
    a2: complex

    def __post_init__(self):
        a1 = complex(self.a1)
        a2 = complex(self.a2)
        if a1 == 0 and a2 == 0:
            raise DomainError("(a1, a2) must be nonzero")
        scale = a1 if abs(a1) >= abs(a2) else a2
        object.__setattr__(self, "a1", a1 / scale)
        object.__setattr__(self, "a2", a2 / scale)

    def proj_equal(self, other, tol=_PROJ_TOL):
        """Projective equality via the cross product a1 b2 - a2 b1."""
        cross = self.a1 * other.a2 - self.a2 * other.a1
        scale = abs(self.a1 * other.a2) + abs(self.a2 * other.a1) + 1.0
        return abs(cross) <= tol * scale


@dataclass(frozen=True)
class ExtensionInvariants:
    """|kappa|, theta = log|kappa|/nu, case label, and the analyticity angle."""

    kappa_mod: float
    theta: float
    case_label: str
    theta_A: float | None


@dataclass(frozen=True)
class SpectralPoint:
    """One eigenvalue z = -mu^2 e^{2 i xi} with its ladder index and residual."""

    z: complex
    j: int
    residual: float
    source: str


@dataclass(frozen=True)
class Spectrum:
    """Continuous part [0, infinity) plus the eigenvalue ladder."""

    eigenvalues: list
    continuous: tuple = field(default=(0.0, float("inf")))


def classify(A, nu):
    """Case I-IV classification of L_A together with theta and theta_A.

    Cases partition [0, infinity] by |kappa| = |a2|/|a1|:
    I at |kappa| = 1 (selfadjoint); II on the rest of the closed band
    [e^{-nu pi/2}, e^{nu pi/2}] (no analytic semigroup; the band boundary
    is treated as II, generation there being open); III inside
    (e^{-nu pi}, e^{nu pi}) but outside the band, angle |theta| - pi/2;
    IV elsewhere, angle pi/2.
    """
    if nu <= 0:
        raise DomainError("nu must be positive")
    A = as_extension(A)
    m1, m2 = abs(A.a1), abs(A.a2)
    if m1 == 0:
        kappa = np.inf
        theta = np.inf
    elif m2 == 0:
        kappa = 0.0
        theta = -np.inf
    else:
        kappa = m2 / m1
        theta = (np.log(m2) - np.log(m1)) / nu
    # band membership decided on theta with a small absolute tolerance so
    # pairs sitting on a boundary within roundoff classify deterministically
    tol = 1e-12
    if abs(kappa - 1.0) <= _PROJ_TOL:
        label = CASE_SELFADJOINT
    elif abs(theta) <= np.pi / 2.0 + tol:
        label = CASE_NONGENERATING
    elif abs(theta) < np.pi - tol:
        label = CASE_SECTOR
    else:
        label = CASE_FULL_ANGLE
    if label in (CASE_SECTOR, CASE_FULL_ANGLE):
        theta_A = float(min(abs(theta) - np.pi / 2.0, np.pi / 2.0))
    else:
        theta_A = None
    return ExtensionInvariants(
        kappa_mod=float(kappa), theta=float(theta), case_label=label, theta_A=theta_A
    )


def as_extension(A):
    if isinstance(A, ExtensionParams):
        return A
    a1, a2 = A
    return ExtensionParams(a1, a2)


def adjoint(A):
    """Adjoint pair B = (conj a2, conj a1)."""
    A = as_extension(A)
    return ExtensionParams(np.conj(A.a2), np.conj(A.a1))


def is_selfadjoint(A):
    """|a1| = |a2| within 1e-12 relative."""
    A = as_extension(A)
    m1, m2 = abs(A.a1), abs(A.a2)
    return abs(m1 - m2) <= _PROJ_TOL * max(m1, m2)


def eigenvalue_equation_residual(A, nu, z):
    """Normalized residual of a1 conj(alpha) = a2 alpha mu^{2 i nu} e^{-2 xi nu} at z."""
    A = as_extension(A)
    av = alpha_coefficient(nu).value
    z = complex(z)
    omega = np.sqrt(-z)
    lo = np.log(omega)
    lhs = A.a1 * np.conj(av)
    rhs = A.a2 * av * np.exp(2j * nu * lo)
    return abs(lhs - rhs) / (abs(lhs) + abs(rhs) + 1e-300)


def eigenvalues(A, nu, j_range):
    """Closed-form eigenvalue ladder from the boundary-matching equation.

    The modulus part fixes the ray angle 2 xi = log(|a2|/|a1|)/nu, the
    phase part a log mu lattice of spacing pi/nu; index j = 0 is assigned
    to the rung with |z| closest to 1.  Returns [] outside the open band
    |kappa| in (e^{-nu pi}, e^{nu pi}) (including a1 = 0 or a2 = 0).
    """
    if nu <= 0:
        raise DomainError("nu must be positive")
    A = as_extension(A)
    j_lo, j_hi = int(j_range[0]), int(j_range[1])
    if j_lo > j_hi:
        raise DomainError("empty j range")
    if A.a1 == 0 or A.a2 == 0:
        return []
    k12 = A.a1 / A.a2
    xi = -np.log(abs(k12)) / (2.0 * nu)
    if not abs(xi) < np.pi / 2.0 - 1e-15:
        return []
    eta = alpha_coefficient(nu).eta
    phase = float(np.angle(k12))
    j_star = int(np.round((2.0 * eta - phase) / (2.0 * np.pi)))
    points = []
    for j in range(j_lo, j_hi + 1):
        lnmu = (phase - 2.0 * eta + 2.0 * np.pi * (j + j_star)) / (2.0 * nu)
        z = -np.exp(2.0 * lnmu) * np.exp(2j * xi)
        res = eigenvalue_equation_residual(A, nu, z)
        points.append(SpectralPoint(z=complex(z), j=j, residual=float(res), source="closed_form"))
    return points


def spectrum(A, nu, j_range):
    """Full spectrum: [0, infinity) plus the eigenvalue ladder."""
    return Spectrum(eigenvalues=eigenvalues(A, nu, j_range))


def scaling_group_member(nu, s):
    """Whether the dilation factor s lies in {e^{m pi / nu} : m integer}."""
    if s <= 0:
        raise DomainError("s must be positive")
    m = nu * np.log(s) / np.pi
    return bool(abs(m - np.round(m)) <= 1e-12 * max(1.0, abs(m)))


def nearest_scaling_member(nu, s):
    """The group element e^{m pi/nu} nearest to s (in log scale)."""
    if s <= 0:
        raise DomainError("s must be positive")
    m = np.round(nu * np.log(s) / np.pi)
    return float(np.exp(m * np.pi / nu))


def _smoothstep(x):
    s = 6.0 * x**5 - 15.0 * x**4 + 10.0 * x**3
    sd = 30.0 * x**4 - 60.0 * x**3 + 30.0 * x**2
    sdd = 120.0 * x**3 - 180.0 * x**2 + 60.0 * x
    return s, sd, sdd


def _cutoff(r, n):
    """C^2 plateau cutoff: support [n/2, 3n], identically 1 on [n, 2n]."""
    eta = np.zeros_like(r)
    etad = np.zeros_like(r)
    etadd = np.zeros_like(r)
    up = (r >= n / 2.0) & (r < n)
    x = (r[up] - n / 2.0) / (n / 2.0)
    s, sd, sdd = _smoothstep(x)
    eta[up] = s
    etad[up] = sd / (n / 2.0)
    etadd[up] = sdd / (n / 2.0) ** 2
    mid = (r >= n) & (r <= 2.0 * n)
    eta[mid] = 1.0
    down = (r > 2.0 * n) & (r <= 3.0 * n)
    x = (r[down] - 2.0 * n) / n
    s, sd, sdd = _smoothstep(x)
    eta[down] = 1.0 - s
    etad[down] = -sd / n
    etadd[down] = -sdd / n**2
    return eta, etad, etadd


def weyl_witness(nu, mu, n, grid=None):
    """Near-eigenfunction psi_n = eta_n phi_{i mu, 0} witnessing mu^2 in sigma.

    Returns (psi_n as a RadialFunction, defect) with
    defect = ||(-mu^2 + L) psi_n|| / ||psi_n||; the numerator uses the
    exact product rule (-mu^2 + L)(eta phi) = -eta'' phi - 2 eta' phi'.

    Raises
    ------
    GridResolutionError
        If a supplied grid resolves the oscillation with fewer than 8
        points per wavelength.
    """
    if n < 2:
        raise DomainError("n must be at least 2")
    if grid is None:
        wavelength = 2.0 * np.pi / mu
        pts = int(max(4001, np.ceil(2.5 * n / wavelength * 25.0)))
        grid = np.linspace(n / 2.0, 3.0 * n, pts)
    else:
        grid = np.asarray(grid, dtype=float)
        dr = np.max(np.diff(grid))
        if 2.0 * np.pi / (mu * dr) < 8.0:
            raise GridResolutionError(
                f"grid resolves only {2.0 * np.pi / (mu * dr):.2f} points per wavelength"
            )
    phi0, phi0d, _, _ = phi_oscillatory_pair(nu, mu, grid)
    eta, etad, etadd = _cutoff(grid, float(n))
    psi = eta * phi0
    defect_fn = -etadd * phi0 - 2.0 * etad * phi0d
    num = np.sqrt(np.trapezoid(np.abs(defect_fn) ** 2, grid))
    den = np.sqrt(np.trapezoid(np.abs(psi) ** 2, grid))
    return RadialFunction(grid, psi), float(num / den)


def write_spectrum_csv(points, path, extra_ratio=False):
    """Eigenvalue CSV `j,re_z,im_z,residual,source` with a continuum marker row.

    The first row marks the essential spectrum [0, infinity); with
    ``extra_ratio`` a sixth column |z_{j+1}|/|z_j| is appended.
    """
    cols = "j,re_z,im_z,residual,source" + (",ratio" if extra_ratio else "")
    pts = sorted(points, key=lambda p: p.j)
    with open(path, "w") as fh:
        fh.write(cols + "\n")
        fh.write(",0,inf,0,continuous" + ("," if extra_ratio else "") + "\n")
        for i, p in enumerate(pts):
            row = f"{p.j},{p.z.real:.17g},{p.z.imag:.17g},{p.residual:.17g},{p.source}"
            if extra_ratio:
                ratio = ""
                if i + 1 < len(pts):
                    ratio = f"{abs(pts[i + 1].z) / abs(p.z):.17g}"
                row += f",{ratio}"
            fh.write(row + "\n")


def classification_json(inv):
    """JSON text for an ExtensionInvariants (infinities as strings)."""

    def enc(x):
        if x is None:
            return None
        if np.isposinf(x):
            return "inf"
        if np.isneginf(x):
            return "-inf"
        return x

    return json.dumps(
        {
            "kappa_mod": enc(inv.kappa_mod),
            "theta": enc(inv.theta),
            "case": inv.case_label,
            "theta_A": enc(inv.theta_A),
        },
        sort_keys=True,
    )
