"""Select the kernel implementation at import time.

The compiled extension is used when importable; set ``GOSPERQ_PURE=1`` to
force the pure-Python kernels.
"""
import os

from . import _pykernels

BACKEND = "python"
_impl = _pykernels

if os.environ.get("GOSPERQ_PURE") != "1":
    try:
        from . import _ckernels as _impl  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        pass

qpoch_inf = _impl.qpoch_inf
theta1_sum = _impl.theta1_sum
theta1_prime_sum = _impl.theta1_prime_sum

__all__ = ["BACKEND", "qpoch_inf", "theta1_sum", "theta1_prime_sum"]
