"""Pure NumPy implementations of the grid kernels.

Signatures match the compiled ``_ckernels`` module exactly; results agree to
rounding.
"""

import numpy as np

TWO_PI = 2.0 * np.pi


def trig_series(theta, ks, ca, cb):
    """Evaluate ``sum_k ca[k] cos(k t) + cb[k] sin(k t)`` at every ``t`` in ``theta``."""
    theta = np.ascontiguousarray(theta, dtype=np.float64)
    if len(ks) == 0:
        return np.zeros_like(theta)
    kt = np.multiply.outer(theta, np.asarray(ks, dtype=np.float64))
    return np.cos(kt) @ np.asarray(ca, dtype=np.float64) + np.sin(kt) @ np.asarray(cb, dtype=np.float64)


def piece_index(theta, breaks):
    """Index of the piece ``[breaks[i], breaks[i+1])`` containing each angle mod 2 pi."""
    theta = np.ascontiguousarray(theta, dtype=np.float64)
    t0 = breaks[0]
    t = t0 + np.mod(theta - t0, TWO_PI)
    idx = np.searchsorted(breaks, t, side="right") - 1
    return np.clip(idx, 0, len(breaks) - 2)


def piecewise_eval(theta, breaks, is_arc, px, py, deriv):
    """Evaluate a vertex/arc support function (deriv 0), its derivative (1) or h''+h (2)."""
    theta = np.ascontiguousarray(theta, dtype=np.float64)
    idx = piece_index(theta, breaks)
    arc = np.asarray(is_arc, dtype=bool)[idx]
    if deriv == 2:
        return arc.astype(np.float64)
    x = np.asarray(px)[idx]
    y = np.asarray(py)[idx]
    c = np.cos(theta)
    s = np.sin(theta)
    if deriv == 0:
        return arc + x * c + y * s
    return -x * s + y * c


def kallay_min_slack(h, half_width):
    """Minimum of h[j+s] + h[j-s] - 2 h[j] cos(s dt) over j and |s| <= half_width.

    ``h`` holds samples on the uniform grid ``j * 2pi / len(h)``. Returns
    ``(min_slack, j, s)`` at the first minimizer in (s, j) scan order.
    """
    h = np.ascontiguousarray(h, dtype=np.float64)
    m = len(h)
    dt = TWO_PI / m
    j = np.arange(m)
    best = np.inf
    best_j = 0
    best_s = 0
    for s in range(-half_width, half_width + 1):
        slack = h[(j + s) % m] + h[(j - s) % m] - 2.0 * h * np.cos(s * dt)
        k = int(np.argmin(slack))
        if slack[k] < best:
            best = float(slack[k])
            best_j = k
            best_s = s
    return best, best_j, best_s
