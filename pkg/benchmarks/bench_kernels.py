"""Time the compiled kernels against the NumPy fallback.

    python benchmarks/bench_kernels.py [--repeat 5]
"""

import argparse
import math
import timeit

import numpy as np

from reuleaux import FourierWidthFunction, _kernels, regular_reuleaux


def cases():
    rng = np.random.default_rng(0)
    theta = 2 * math.pi * np.arange(16384) / 16384
    fig = FourierWidthFunction([(k, *1e-4 * rng.normal(size=2)) for k in range(1, 64, 2)])
    poly = regular_reuleaux(1001).support
    pts = (poly.points[:, 0].copy(), poly.points[:, 1].copy())
    h512 = fig.h(2 * math.pi * np.arange(512) / 512)
    return {
        "trig_series (16384 x 32 harmonics)": lambda k: k.trig_series(theta, fig.ks, fig.a, fig.b),
        "piece_index (16384 in 2002 pieces)": lambda k: k.piece_index(theta, poly.breaks),
        "piecewise_eval h (16384, 2002 pieces)": lambda k: k.piecewise_eval(theta, poly.breaks, poly.is_arc, *pts, 0),
        "kallay_min_slack (512 x 257)": lambda k: k.kallay_min_slack(h512, 128),
    }


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    backends = {"python": _kernels.pure}
    if _kernels.compiled is not None:
        backends["cython"] = _kernels.compiled
    else:
        print("compiled kernels unavailable; timing the fallback only")
    print(f"{'kernel':40s}" + "".join(f"{b:>12s}" for b in backends) + ("     speedup" if len(backends) == 2 else ""))
    for name, fn in cases().items():
        times = {}
        for b, mod in backends.items():
            number = max(1, int(0.2 / max(timeit.timeit(lambda: fn(mod), number=1), 1e-6)))
            best = min(timeit.repeat(lambda: fn(mod), number=number, repeat=args.repeat)) / number
            times[b] = best
        row = f"{name:40s}" + "".join(f"{t * 1e3:10.3f}ms" for t in times.values())
        if len(times) == 2:
            row += f"{times['python'] / times['cython']:11.1f}x"
        print(row)


if __name__ == "__main__":
    main()
