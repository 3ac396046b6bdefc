"""Sampled complex-valued functions on (0, infinity) and their CSV format."""

from dataclasses import dataclass, field

import numpy as np
from scipy.interpolate import CubicSpline

from .errors import DomainError

CSV_HEADER = "r,re,im"


def log_grid(r_min, r_max, n):
    """Logarithmically spaced grid on [r_min, r_max]."""
    if not 0 < r_min < r_max:
        raise DomainError("need 0 < r_min < r_max")
    if n < 2:
        raise DomainError("need at least two grid points")
    return np.geomspace(r_min, r_max, int(n))


def _infer_spacing(grid):
    if grid.size < 3:
        return "linear"
    d = np.diff(grid)
    if np.allclose(d, d[0], rtol=1e-8, atol=0.0):
        return "linear"
    q = grid[1:] / grid[:-1]
    if np.allclose(q, q[0], rtol=1e-8, atol=0.0):
        return "log"
    return "irregular"


@dataclass(frozen=True)
class RadialFunction:
    """Complex samples of u on a strictly increasing positive grid.

    Values are immutable after construction; operations return new
    instances.  The L^2(R_+) pairing treats u as zero outside the grid.
    """

    grid: np.ndarray
    values: np.ndarray
    spacing: str = field(default="")

    def __post_init__(self):
        grid = np.asarray(self.grid, dtype=float)
        values = np.asarray(self.values, dtype=complex)
        if grid.ndim != 1 or grid.size < 2:
            raise DomainError("grid must be 1-d with at least two points")
        if grid[0] <= 0:
            raise DomainError("grid must be strictly positive")
        if not np.all(np.diff(grid) > 0):
            raise DomainError("grid must be strictly increasing")
        if values.shape != grid.shape:
            raise DomainError("values must match the grid in length")
        if not (np.all(np.isfinite(grid)) and np.all(np.isfinite(values))):
            raise DomainError("grid and values must be finite")
        grid.setflags(write=False)
        values.setflags(write=False)
        object.__setattr__(self, "grid", grid)
        object.__setattr__(self, "values", values)
        if not self.spacing:
            object.__setattr__(self, "spacing", _infer_spacing(grid))

    def __len__(self):
        return self.grid.size

    def norm(self):
        """L^2 norm by trapezoidal quadrature on the grid."""
        return float(np.sqrt(np.trapezoid(np.abs(self.values) ** 2, self.grid)))

    def inner(self, other):
        """L^2 inner product <self, other> = int self * conj(other), common grid."""
        if not np.array_equal(self.grid, other.grid):
            raise DomainError("inner product requires a common grid")
        return complex(np.trapezoid(self.values * np.conj(other.values), self.grid))

    def spline(self):
        """Cubic interpolant in log r (real and imaginary parts), 0 outside."""
        x = np.log(self.grid)
        sre = CubicSpline(x, self.values.real)
        sim = CubicSpline(x, self.values.imag)
        lo, hi = self.grid[0], self.grid[-1]

        def f(r):
            r = np.asarray(r, dtype=float)
            inside = (r >= lo) & (r <= hi)
            out = np.zeros(r.shape, dtype=complex)
            xr = np.log(np.where(inside, r, lo))
            out[inside] = sre(xr[inside]) + 1j * sim(xr[inside])
            return out

        return f

    def resample(self, new_grid):
        f = self.spline()
        new_grid = np.asarray(new_grid, dtype=float)
        return RadialFunction(new_grid, f(new_grid))

    def dilate(self, s):
        """Unitary dilation (I_s u)(r) = s^{1/2} u(s r); exact on samples."""
        if s <= 0:
            raise DomainError("dilation factor must be positive")
        return RadialFunction(self.grid / s, np.sqrt(s) * self.values)

    def __add__(self, other):
        if not np.array_equal(self.grid, other.grid):
            raise DomainError("grids differ")
        return RadialFunction(self.grid, self.values + other.values)

    def __sub__(self, other):
        if not np.array_equal(self.grid, other.grid):
            raise DomainError("grids differ")
        return RadialFunction(self.grid, self.values - other.values)

    def __mul__(self, c):
        return RadialFunction(self.grid, self.values * c)

    __rmul__ = __mul__

    def to_csv(self, path):
        with open(path, "w") as fh:
            fh.write(CSV_HEADER + "\n")
            for r, w in zip(self.grid, self.values):
                fh.write(f"{r:.17g},{w.real:.17g},{w.imag:.17g}\n")

    @classmethod
    def from_csv(cls, path):
        with open(path) as fh:
            header = fh.readline().strip()
            if header.replace(" ", "") != CSV_HEADER:
                raise DomainError(f"unexpected CSV header {header!r}")
            rows = [line.strip().split(",") for line in fh if line.strip()]
        data = np.array([[float(c) for c in row] for row in rows], dtype=float)
        return cls(data[:, 0], data[:, 1] + 1j * data[:, 2])
