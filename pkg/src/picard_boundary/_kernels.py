"""Hot integer kernels with a numba path and a pure-numpy fallback.

The backend is chosen once at import time from ``PICARD_BOUNDARY_BACKEND``
(``numba`` or ``numpy``).  When the variable is unset numba is used if it
imports.  Both backends are always importable under explicit names
(``orbit_scan_numpy`` / ``orbit_scan_numba`` ...) so tests and the benchmark
can compare them directly.
"""

import os

import numpy as np

# Row s of these tables is the dot action of the s-th S3 element on one
# triple: mu[j] = lam[PERMS[s, j]] + SHIFTS[s, j].
# Order: e, (12), (23), (123), (132), (13).
PERMS = np.array(
    [[0, 1, 2], [1, 0, 2], [0, 2, 1], [2, 0, 1], [1, 2, 0], [2, 1, 0]],
    dtype=np.int64,
)
SHIFTS = np.array(
    [[0, 0, 0], [-1, 1, 0], [0, -1, 1], [-2, 1, 1], [-1, -1, 2], [-2, 0, 2]],
    dtype=np.int64,
)

try:
    import numba

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover
    numba = None
    HAVE_NUMBA = False

_requested = os.environ.get("PICARD_BOUNDARY_BACKEND", "").strip().lower()
if _requested not in ("", "numba", "numpy"):
    raise ImportError(
        f"PICARD_BOUNDARY_BACKEND must be 'numba' or 'numpy', got {_requested!r}"
    )
BACKEND = "numpy" if _requested == "numpy" or not HAVE_NUMBA else "numba"

# rows of the (n, S) scan processed per numpy chunk; bounds peak memory
_CHUNK_CELLS = 1 << 20


def orbit_scan_numpy(triples, d, codes):
    """Dot-act every sigma on every character.

    ``triples`` is (n, g, 3), ``d`` is (n,), ``codes`` is (S, g) with factor
    indices into PERMS.  Returns ``(trivial, const, weight)``, each (n, S):
    whether a_i - c_i of sigma.lam is the same for all i, that common value
    (the first index's value when not trivial), and the Hodge weight
    -2d - sum(2a + b) of sigma.lam.
    """
    triples = np.asarray(triples, dtype=np.int64)
    d = np.asarray(d, dtype=np.int64)
    codes = np.asarray(codes, dtype=np.int64)
    n, g, _ = triples.shape
    S = codes.shape[0]
    perms = PERMS[codes]  # (S, g, 3)
    shifts = SHIFTS[codes]
    trivial = np.empty((n, S), dtype=bool)
    const = np.empty((n, S), dtype=np.int64)
    weight = np.empty((n, S), dtype=np.int64)
    step = max(1, _CHUNK_CELLS // max(1, S * g))
    for lo in range(0, n, step):
        hi = min(n, lo + step)
        t = triples[lo:hi, None, :, :]
        full = np.broadcast_to(t, (hi - lo, S, g, 3))
        idx = np.broadcast_to(perms[None], (hi - lo, S, g, 3))
        mu = np.take_along_axis(full, idx, axis=3) + shifts[None]
        diff = mu[..., 0] - mu[..., 2]
        trivial[lo:hi] = np.all(diff == diff[..., :1], axis=2)
        const[lo:hi] = diff[..., 0]
        weight[lo:hi] = -2 * d[lo:hi, None] - (2 * mu[..., 0] + mu[..., 1]).sum(axis=2)
    return trivial, const, weight


def exterior_tally_numpy(shifts, r, size, origin):
    """Dense weight multiset of the exterior algebra.

    Each entry of ``shifts`` is the flat-index offset of one basis weight;
    every basis weight occurs with multiplicity ``r``, so it contributes the
    factor sum_k C(r, k) x^(k * shift).  Returns an int64 array of length
    ``size`` holding multiplicities, starting from a single 1 at ``origin``.
    """
    binoms = _binomials(r)
    arr = np.zeros(size, dtype=np.int64)
    arr[origin] = 1
    for s in np.asarray(shifts, dtype=np.int64):
        new = arr.copy()
        for k in range(1, r + 1):
            off = int(k * s)
            if off >= 0:
                new[off:] += binoms[k] * arr[: size - off]
            else:
                new[: size + off] += binoms[k] * arr[-off:]
        arr = new
    return arr


def _binomials(r):
    out = np.ones(r + 1, dtype=np.int64)
    for k in range(1, r + 1):
        out[k] = out[k - 1] * (r - k + 1) // k
    return out


if HAVE_NUMBA:

    @numba.njit(cache=True)
    def _orbit_scan_nb(triples, d, codes, perms, shifts):
        n, g, _ = triples.shape
        S = codes.shape[0]
        trivial = np.empty((n, S), dtype=np.bool_)
        const = np.empty((n, S), dtype=np.int64)
        weight = np.empty((n, S), dtype=np.int64)
        for i in range(n):
            for s in range(S):
                w = -2 * d[i]
                ok = True
                m0 = 0
                for j in range(g):
                    c = codes[s, j]
                    x0 = triples[i, j, perms[c, 0]] + shifts[c, 0]
                    x1 = triples[i, j, perms[c, 1]] + shifts[c, 1]
                    x2 = triples[i, j, perms[c, 2]] + shifts[c, 2]
                    w -= 2 * x0 + x1
                    diff = x0 - x2
                    if j == 0:
                        m0 = diff
                    elif diff != m0:
                        ok = False
                trivial[i, s] = ok
                const[i, s] = m0
                weight[i, s] = w
        return trivial, const, weight

    @numba.njit(cache=True)
    def _tally_nb(shifts, binoms, size, origin):
        arr = np.zeros(size, dtype=np.int64)
        arr[origin] = 1
        r = binoms.shape[0] - 1
        for s in shifts:
            new = arr.copy()
            for x in range(size):
                v = arr[x]
                if v == 0:
                    continue
                for k in range(1, r + 1):
                    y = x + k * s
                    if 0 <= y < size:
                        new[y] += binoms[k] * v
            arr = new
        return arr

    def orbit_scan_numba(triples, d, codes):
        return _orbit_scan_nb(
            np.ascontiguousarray(triples, dtype=np.int64),
            np.ascontiguousarray(d, dtype=np.int64),
            np.ascontiguousarray(codes, dtype=np.int64),
            PERMS,
            SHIFTS,
        )

    def exterior_tally_numba(shifts, r, size, origin):
        return _tally_nb(
            np.ascontiguousarray(shifts, dtype=np.int64), _binomials(r), size, origin
        )

    orbit_scan_numba.__doc__ = orbit_scan_numpy.__doc__
    exterior_tally_numba.__doc__ = exterior_tally_numpy.__doc__


if BACKEND == "numba":
    orbit_scan = orbit_scan_numba
    exterior_tally = exterior_tally_numba
else:
    orbit_scan = orbit_scan_numpy
    exterior_tally = exterior_tally_numpy
