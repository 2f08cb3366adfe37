"""Backend selection for the arithmetic hot loops.

The compiled extension is used when it was built; ``SURFSYM_PURE=1`` forces
the pure-Python fallback (used by the benchmark and the parity tests).
"""
import os

from . import _pykernel

_FORCE_PURE = os.environ.get("SURFSYM_PURE", "").strip() not in ("", "0")

try:
    if _FORCE_PURE:
        raise ImportError("pure backend requested")
    from . import _ckernel as _impl
    BACKEND = "cython"
except ImportError:
    _impl = _pykernel
    BACKEND = "python"

mul_terms = _impl.mul_terms
det_bareiss = _impl.det_bareiss
horner_scaled = _impl.horner_scaled
umul = _impl.umul
uprem = _impl.uprem
