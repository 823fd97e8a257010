"""Float kernel dispatch.

The compiled extension ``_ckernels`` is used when it imports; otherwise, or
when ``SERINV_PURE_PYTHON`` is set to a non-empty value other than ``0``, the
pure-Python module with the same functions is used.  ``BACKEND`` names the
active one.
"""
import importlib
import os

from . import _pykernels

GAUSS_QUARTIC = _pykernels.GAUSS_QUARTIC
EXP_RATIONAL = _pykernels.EXP_RATIONAL


def load_backend(name: str):
    """Return the kernel module ``"cython"`` or ``"python"``; raises ImportError."""
    if name == "python":
        return _pykernels
    if name == "cython":
        return importlib.import_module("serinv._ckernels")
    raise ValueError(f"unknown kernel backend {name!r}")


def _select():
    if os.environ.get("SERINV_PURE_PYTHON", "") not in ("", "0"):
        return "python", _pykernels
    try:
        return "cython", load_backend("cython")
    except ImportError:
        return "python", _pykernels


BACKEND, _impl = _select()
polylog_sum = _impl.polylog_sum
gk15_adaptive = _impl.gk15_adaptive
