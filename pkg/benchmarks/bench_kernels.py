"""Time the numba and numpy kernel backends side by side.

    python3 benchmarks/bench_kernels.py [--repeat N]

Both backends are called through their explicit names, so the
PICARD_BOUNDARY_BACKEND setting does not matter here.  The first numba call
per signature is a warm-up and is excluded from the timings.
"""

import argparse
import statistics
import time

import numpy as np

from picard_boundary import _kernels
from picard_boundary.constituents import _box, basis_weights, dominant_triples
from picard_boundary.weyl import all_codes


def scan_inputs(g, r):
    # every dominant triple combination with d = 0, like a full constituent sweep
    tri = np.array(dominant_triples(r), dtype=np.int64)
    idx = np.stack(np.meshgrid(*[np.arange(len(tri))] * g, indexing="ij"), -1).reshape(-1, g)
    triples = tri[idx]
    d = np.zeros(len(triples), dtype=np.int64)
    return triples, d, all_codes(g)


def tally_inputs(g, r):
    lo, ext, strides = _box(g, r)
    size = int(np.prod(ext))
    shifts = np.array([int(np.dot(w, strides)) for w in basis_weights(g)], dtype=np.int64)
    return shifts, r, size, int(np.dot(-lo, strides))


def timeit(fn, args, repeat):
    fn(*args)
    out = []
    for _ in range(repeat):
        t = time.perf_counter()
        fn(*args)
        out.append(time.perf_counter() - t)
    return statistics.median(out)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    if not _kernels.HAVE_NUMBA:
        raise SystemExit("numba is not installed; nothing to compare")

    cases = [
        ("orbit_scan", (2, 2), scan_inputs),
        ("orbit_scan", (3, 1), scan_inputs),
        ("orbit_scan", (3, 2), scan_inputs),
        ("exterior_tally", (2, 1), tally_inputs),
        ("exterior_tally", (2, 2), tally_inputs),
        ("exterior_tally", (3, 1), tally_inputs),
    ]
    print("kernel\tg\tr\tnumpy_s\tnumba_s\tspeedup")
    for name, (g, r), make in cases:
        inputs = make(g, r)
        fast = getattr(_kernels, f"{name}_numba")
        slow = getattr(_kernels, f"{name}_numpy")
        a, b = fast(*inputs), slow(*inputs)
        same = all(np.array_equal(x, y) for x, y in zip(a, b)) if isinstance(a, tuple) else np.array_equal(a, b)
        assert same, f"{name} backends disagree at g={g}, r={r}"
        t_np = timeit(slow, inputs, args.repeat)
        t_nb = timeit(fast, inputs, args.repeat)
        print(f"{name}\t{g}\t{r}\t{t_np:.4f}\t{t_nb:.4f}\t{t_np / t_nb:.1f}x", flush=True)


if __name__ == "__main__":
    main()
