"""Spectral toolbox for the half-line inverse-square Hamiltonian.

Realizes every extension L_A of -d^2/dr^2 + b/r^2 (b < -1/4) with
nonempty resolvent set as a computable object: classification, spectrum,
resolvent, analytic-semigroup evolution, independent numerical oracles,
and the N-dimensional radial reduction.
"""

from ._backend import backend_name
from .special import AlphaCoefficient, CouplingNu, alpha_coefficient, bessel_i_imag_order, bessel_k_imag_order, complex_gamma, coupling

__version__ = "0.1.0"

__all__ = [
    "AlphaCoefficient",
    "CouplingNu",
    "alpha_coefficient",
    "backend_name",
    "bessel_i_imag_order",
    "bessel_k_imag_order",
    "complex_gamma",
    "coupling",
    "__version__",
]
