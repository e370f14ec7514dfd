"""Arithmetic backend selection.

The compiled Cython kernels are preferred when importable; the pure-Python
module is a drop-in replacement (identical functions and data layout).  Set
the environment variable ``TWISTEDREAL_PURE`` to any non-empty value to force
the interpreted backend, e.g. for benchmarking.
"""

import os

from . import _kernels_py

FORCE_PURE_ENV = "TWISTEDREAL_PURE"

impl = _kernels_py
backend = "python"

if not os.environ.get(FORCE_PURE_ENV):
    try:
        from . import _kernels_cy  # type: ignore[attr-defined]

        impl = _kernels_cy
        backend = "cython"
    except ImportError:
        pass


def available_backends():
    names = ["python"]
    try:
        from . import _kernels_cy  # noqa: F401

        names.append("cython")
    except ImportError:
        pass
    return names


def set_backend(name):
    """Swap the active backend ("python" or "cython"). Used by benchmarks."""
    global impl, backend
    if name == "python":
        impl = _kernels_py
    elif name == "cython":
        from . import _kernels_cy

        impl = _kernels_cy
    else:
        raise ValueError(f"unknown kernel backend {name!r}")
    backend = name
