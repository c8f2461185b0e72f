"""Irreducible constituents of the exterior powers of r copies of the dual standard representation.

Two independent routes: ``enumerate_constituents`` solves the inequality
system directly, ``oracle_decompose`` tallies the full weight multiset of
the exterior power and peels off irreducible characters.
"""

from dataclasses import dataclass
from functools import lru_cache
import itertools
import math

import numpy as np

from . import _kernels
from .errors import BudgetExceeded, OracleFailure
from .lattice import TorusCharacter, degree, is_dominant

DEFAULT_SUBSET_BUDGET = 10**7
# dense tally array cells
MAX_TALLY_CELLS = 1 << 26


@dataclass(frozen=True)
class EnumerationSpec:
    g: int
    r: int
    p: int

    def __post_init__(self):
        if self.g < 1 or self.r < 1:
            raise ValueError(f"g and r must be positive, got g={self.g}, r={self.r}")

    @property
    def dim(self):
        """Dimension 6rg of the underlying vector space."""
        return 6 * self.r * self.g


@dataclass(frozen=True)
class ConstituentSet:
    spec: EnumerationSpec
    characters: tuple

    def __len__(self):
        return len(self.characters)

    def __iter__(self):
        return iter(self.characters)

    def to_json(self):
        return {
            "g": self.spec.g,
            "r": self.spec.r,
            "p": self.spec.p,
            "constituents": [{"character": str(c), "multiplicity": None} for c in self.characters],
        }


def _pos(x):
    return max(x, 0)


def _neg(x):
    return min(x, 0)


def is_constituent(lam, spec):
    if lam.g != spec.g:
        raise ValueError(f"g mismatch: {lam.g} triples for g={spec.g}")
    r = spec.r
    if degree(lam) != spec.p:
        return False
    if not all(-r <= c <= b <= a <= r for a, b, c in lam.triples):
        return False
    upper = 3 * spec.g * r + sum(_neg(a) + _neg(b) + _neg(c) for a, b, c in lam.triples)
    lower = sum(_pos(a) + _pos(b) + _pos(c) for a, b, c in lam.triples)
    return upper >= -lam.d >= lower


@lru_cache(maxsize=None)
def dominant_triples(r):
    return tuple(
        (a, b, c)
        for a in range(r, -r - 1, -1)
        for b in range(a, -r - 1, -1)
        for c in range(b, -r - 1, -1)
    )


def enumerate_constituents(spec):
    """All dominant highest weights of the degree-p exterior power, canonically sorted."""
    g, r, p = spec.g, spec.r, spec.p
    if p < 0 or p > spec.dim:
        return ConstituentSet(spec, ())
    out = []
    for triples in itertools.product(dominant_triples(r), repeat=g):
        s = sum(sum(t) for t in triples)
        # degree fixes d: p = -2d - s
        if (p + s) % 2:
            continue
        lam = TorusCharacter(triples, -(p + s) // 2)
        if is_constituent(lam, spec):
            out.append(lam)
    out.sort()
    return ConstituentSet(spec, tuple(out))


def weyl_dimension(triple):
    a, b, c = triple
    return (a - b + 1) * (b - c + 1) * (a - c + 2) // 2


def irreducible_dimension(lam):
    return math.prod(weyl_dimension(t) for t in lam.triples)


def _check_dominant_triple(high):
    a, b, c = high
    if not a >= b >= c:
        raise ValueError(f"highest weight {high} is not dominant")


def gl3_weight_multiplicity(high, w):
    """Multiplicity of weight w in the GL3 irreducible of highest weight ``high``.

    Counts Gelfand-Tsetlin patterns (a, b, c) / (u, v) / w1 with the given
    weight.
    """
    _check_dominant_triple(high)
    a, b, c = high
    w1, w2, w3 = w
    if a + b + c != w1 + w2 + w3:
        return 0
    count = 0
    for u in range(b, a + 1):
        for v in range(c, b + 1):
            if u >= w1 >= v and u + v == w1 + w2:
                count += 1
    return count


@lru_cache(maxsize=4096)
def gl3_character(high):
    """{weight: multiplicity} of the GL3 irreducible, from Gelfand-Tsetlin patterns."""
    _check_dominant_triple(high)
    a, b, c = high
    out = {}
    for u in range(b, a + 1):
        for v in range(c, b + 1):
            for w1 in range(v, u + 1):
                w = (w1, u + v - w1, a + b + c - u - v)
                out[w] = out.get(w, 0) + 1
    return out


def irreducible_character(lam):
    """{coords: multiplicity} of the irreducible of highest weight lam (d is a 1-dim factor)."""
    chars = [gl3_character(t) for t in lam.triples]
    out = {}
    for combo in itertools.product(*(c.items() for c in chars)):
        coords = tuple(x for w, _ in combo for x in w) + (lam.d,)
        out[coords] = math.prod(m for _, m in combo)
    return out


def _box(g, r):
    lo = np.array([-r] * (3 * g) + [-3 * g * r], dtype=np.int64)
    ext = np.array([2 * r + 1] * (3 * g) + [3 * g * r + 1], dtype=np.int64)
    strides = np.ones_like(ext)
    for i in range(len(ext) - 2, -1, -1):
        strides[i] = strides[i + 1] * ext[i + 1]
    return lo, ext, strides


def basis_weights(g):
    """The 6g weights of the dual standard representation, as coordinate tuples.

    The + summand at index i contributes -e_j with d = 0, the - summand
    contributes +e_j with d = -1.
    """
    out = []
    for i in range(g):
        for sign, d in ((-1, 0), (1, -1)):
            for j in range(3):
                v = [0] * (3 * g + 1)
                v[3 * i + j] = sign
                v[-1] = d
                out.append(tuple(v))
    return out


def exterior_weights(g, r, p=None, subset_budget=DEFAULT_SUBSET_BUDGET):
    """Weight multiset {coords: multiplicity} of the exterior power of degree p (all degrees if None)."""
    n = 6 * g * r
    if p is not None:
        if p < 0 or p > n:
            return {}
        if math.comb(n, p) > subset_budget:
            raise BudgetExceeded(
                f"C({n}, {p}) = {math.comb(n, p)} subsets exceeds budget {subset_budget}"
            )
    if n > 62:
        raise BudgetExceeded(f"dimension {n} overflows int64 multiplicities")
    lo, ext, strides = _box(g, r)
    size = int(np.prod(ext))
    if size > MAX_TALLY_CELLS:
        raise BudgetExceeded(f"weight box of {size} cells exceeds {MAX_TALLY_CELLS}")
    shifts = np.array([int(np.dot(w, strides)) for w in basis_weights(g)], dtype=np.int64)
    origin = int(np.dot(-lo, strides))
    tally = _kernels.exterior_tally(shifts, r, size, origin)
    idx = np.nonzero(tally)[0]
    coords = np.stack(np.unravel_index(idx, tuple(ext)), axis=1) + lo
    degs = -2 * coords[:, -1] - coords[:, :-1].sum(axis=1)
    out = {}
    for c, deg, m in zip(coords.tolist(), degs.tolist(), tally[idx].tolist()):
        if p is None or deg == p:
            out[tuple(c)] = m
    return out


def _peel(weights):
    """Split a weight multiset into highest weights by lexicographic peeling."""
    weights = dict(weights)
    if any(m < 0 for m in weights.values()):
        raise OracleFailure("negative multiplicity in input multiset")
    dominant = sorted(
        (c for c in weights if is_dominant(TorusCharacter.from_coords(c))), reverse=True
    )
    result = []
    for c in dominant:
        m = weights.get(c, 0)
        if m == 0:
            continue
        if m < 0:
            raise OracleFailure(f"multiplicity of {c} went negative ({m})")
        lam = TorusCharacter.from_coords(c)
        result.append((lam, m))
        for w, k in irreducible_character(lam).items():
            left = weights.get(w, 0) - m * k
            if left < 0:
                raise OracleFailure(f"peeling {lam} drove weight {w} to {left}")
            weights[w] = left
    leftover = {c: m for c, m in weights.items() if m}
    if leftover:
        raise OracleFailure(f"{len(leftover)} weights left after peeling")
    result.sort(key=lambda x: x[0])
    return result


def oracle_decompose(spec, subset_budget=DEFAULT_SUBSET_BUDGET):
    """Brute-force decomposition: list of (highest weight, multiplicity), canonically sorted."""
    if spec.p < 0 or spec.p > spec.dim:
        return []
    return _peel(exterior_weights(spec.g, spec.r, spec.p, subset_budget))


def decomposition_to_json(spec, decomposition):
    return {
        "g": spec.g,
        "r": spec.r,
        "p": spec.p,
        "constituents": [
            {"character": str(lam), "multiplicity": m} for lam, m in decomposition
        ],
    }
