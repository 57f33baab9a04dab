"""Time the numba kernels against their numpy twins.

    python benchmarks/bench_kernels.py [--repeat 5] [--sizes 64 256 1024]

Prints one line per (kernel, size) with the best-of-N time of each backend,
the speedup and the max abs difference between the two results.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from infoplane._accel import NUMBA_KERNELS, NUMPY_KERNELS


def best_of(fn, args, repeat):
    fn(*args)  # warm-up (triggers numba compilation)
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn(*args)
        times.append(time.perf_counter() - t0)
    return min(times), out


def cases(m, rng):
    pts = rng.normal(size=(m, 32))
    k = np.exp(-NUMPY_KERNELS.sq_dists(pts) / 64.0)
    l = np.exp(-NUMPY_KERNELS.sq_dists(rng.normal(size=(m, 4))) / 8.0)
    yield "sq_dists", (pts,)
    yield "center_gram", (k,)
    yield "trace_product", (k, l)
    n = max(1, m // 64)
    xp = rng.normal(size=(n, 6, 32, 32)).astype(np.float32)
    oh = ow = 28
    yield "im2col", (xp, 5, 1, oh, ow)
    cols = NUMPY_KERNELS.im2col(xp, 5, 1, oh, ow)
    yield "col2im", (cols, n, 6, 32, 32, 5, 1, oh, ow)


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--repeat", type=int, default=5)
    p.add_argument("--sizes", type=int, nargs="+", default=[64, 256, 1024])
    args = p.parse_args(argv)
    if NUMBA_KERNELS is None:
        raise SystemExit("numba is not importable; nothing to compare")
    rng = np.random.default_rng(0)
    print(f"{'kernel':<14}{'m':>6}{'numpy ms':>12}{'numba ms':>12}{'speedup':>10}{'max diff':>12}")
    for m in args.sizes:
        for name, fargs in cases(m, rng):
            t_np, out_np = best_of(getattr(NUMPY_KERNELS, name), fargs, args.repeat)
            t_nb, out_nb = best_of(getattr(NUMBA_KERNELS, name), fargs, args.repeat)
            diff = float(np.max(np.abs(np.asarray(out_np) - np.asarray(out_nb))))
            print(f"{name:<14}{m:>6}{t_np * 1e3:>12.3f}{t_nb * 1e3:>12.3f}{t_np / t_nb:>10.2f}{diff:>12.2e}")


if __name__ == "__main__":
    main()
