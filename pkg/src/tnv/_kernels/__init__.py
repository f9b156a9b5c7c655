"""Integer hot loops, compiled when possible.

The Cython extension ``_ckernels`` is used if it was built; otherwise, or when
``TNV_PURE_PYTHON=1`` is set, the pure-Python module with the same API is
used.  ``BACKEND`` names the active implementation.
"""

import os

from tnv._kernels import _pure

if os.environ.get("TNV_PURE_PYTHON") == "1":
    _impl = _pure
else:
    try:
        from tnv._kernels import _ckernels as _impl
    except ImportError:
        _impl = _pure

BACKEND = "cython" if _impl is not _pure else "python"

ball_profile = _impl.ball_profile
syt_diagonal_stats = _impl.syt_diagonal_stats
chain_shape_visits = _impl.chain_shape_visits


def backends():
    """Every importable implementation, keyed by name."""
    found = {"python": _pure}
    try:
        from tnv._kernels import _ckernels
    except ImportError:
        pass
    else:
        found["cython"] = _ckernels
    return found
