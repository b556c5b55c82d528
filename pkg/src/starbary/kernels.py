"""Backend selection for the evaluation kernels.

The compiled Cython module is used when it was built; otherwise the numpy
implementation in :mod:`starbary._fallback` takes over.  Setting the
environment variable ``STARBARY_PURE=1`` forces the fallback.

Both backends expose ``bary_eval``, ``trig_eval`` and ``disk_eval`` taking
contiguous float64 arrays.
"""

import os

from . import _fallback

_compiled = None
if os.environ.get("STARBARY_PURE", "") not in ("1", "true", "yes"):
    try:
        from . import _kernels as _compiled
    except ImportError:  # extension not built
        _compiled = None

if _compiled is not None:
    BACKEND = "cython"
    bary_eval = _compiled.bary_eval
    trig_eval = _compiled.trig_eval
    disk_eval = _compiled.disk_eval
else:
    BACKEND = "numpy"
    bary_eval = _fallback.bary_eval
    trig_eval = _fallback.trig_eval
    disk_eval = _fallback.disk_eval


def get_backend(name):
    """Return the kernel module for ``"cython"`` or ``"numpy"``.

    Raises ImportError when the compiled backend is requested but unavailable.
    """
    if name == "numpy":
        return _fallback
    if name == "cython":
        if _compiled is None:
            from . import _kernels
            return _kernels
        return _compiled
    raise ValueError(f"unknown backend {name!r}")
