"""Kernel-lane selection.

The numerically hot kernels (complex gamma, imaginary-order Bessel
series/asymptotics, the adaptive radial integrator) exist twice: a Cython
extension ``_ckernels`` and a numpy twin ``_pykernels`` with identical
signatures.  The compiled lane is preferred when importable; set
``CALOGERO_BACKEND=python`` or ``CALOGERO_BACKEND=compiled`` to force one.
"""

import os

_forced = os.environ.get("CALOGERO_BACKEND", "").strip().lower()

if _forced in ("python", "pure", "purepython"):
    from . import _pykernels as _impl
elif _forced in ("", "compiled", "cython"):
    try:
        from . import _ckernels as _impl
    except ImportError:
        if _forced:
            raise
        from . import _pykernels as _impl
else:
    raise ImportError(f"unknown CALOGERO_BACKEND value: {_forced!r}")

BACKEND = _impl.NAME

gamma_cx = _impl.gamma_cx
i_pair_many = _impl.i_pair_many
k_series_many = _impl.k_series_many
k_asym_many = _impl.k_asym_many
v_asym_many = _impl.v_asym_many
integrate_radial = _impl.integrate_radial


def backend_name():
    """Name of the active kernel lane, 'compiled' or 'python'."""
    return BACKEND
