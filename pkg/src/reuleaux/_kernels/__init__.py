"""Grid kernels with a compiled core and a NumPy fallback.

The Cython extension ``_ckernels`` is used when it was built; otherwise the
pure NumPy ``_pykernels`` module is selected. ``BACKEND`` names the active
implementation.
"""

from . import _pykernels as pure

try:
    from . import _ckernels as compiled
except ImportError:  # extension not built
    compiled = None

_active = compiled if compiled is not None else pure
BACKEND = "cython" if compiled is not None else "python"

trig_series = _active.trig_series
piece_index = _active.piece_index
piecewise_eval = _active.piecewise_eval
kallay_min_slack = _active.kallay_min_slack

__all__ = [
    "BACKEND",
    "compiled",
    "pure",
    "trig_series",
    "piece_index",
    "piecewise_eval",
    "kallay_min_slack",
]
