"""Weights of i^* R^k j_* R^p f_* Q at a cusp: closed-form table versus exhaustive sweep.

The sweep is the ground truth.  It unions, over every constituent lam of the
degree-p exterior power, the degree-k weights of the boundary profile of lam.
"""

from dataclasses import dataclass, field
from importlib import resources
import json
import math

import numpy as np

from . import _kernels
from ._parallel import parallel_map
from .boundary import boundary_profile
from .constituents import EnumerationSpec, enumerate_constituents
from .weyl import CODE_LENGTHS, all_codes


def _floor(num, den):
    if num < 0 or den <= 0:
        raise ArithmeticError(f"floor argument {num}/{den} outside the non-negative range")
    return num // den


def _check_k(g, k):
    if not 0 <= k <= 4 * g - 1:
        raise ValueError(f"k={k} outside [0, {4 * g - 1}]")


def closed_form_weights(g, r, p, k):
    """The closed-form weight set, rows (a)-(d) plus the two special rows."""
    _check_k(g, k)
    n = 6 * r * g
    if p < 0 or p > n:
        return set()
    if p in (1, n - 1):
        if 1 <= k <= g:
            return {p}
        if 3 * g - 1 <= k <= 4 * g - 2:
            return {p + 4 * g}
        return set()
    fl = _floor(p, g)
    outer = min(fl, 6 * r - fl, 2 * r)
    if k <= g - 1:
        return {p - m * g for m in range(0, outer + 1)}
    if k >= 3 * g:
        return {p + m * g for m in range(4, outer + 4 + 1)}
    span = r * (k - g + 1)
    inner = min(
        fl,
        _floor(p + span, k + 1),
        _floor(n + span - p, k + 1),
        _floor(n - p, g),
    )
    if k <= 2 * g - 1:
        return {p - m * g for m in range(-1, inner - 1 + 1)}
    return {p + m * g for m in range(3, inner + 3 + 1)}


def _sweep(g, r, p):
    """For each constituent and sigma: H_C-triviality, weight; returns (lams, trivial, weight)."""
    cset = enumerate_constituents(EnumerationSpec(g, r, p))
    lams = cset.characters
    if not lams:
        return lams, None, None
    triples = np.array([lam.triples for lam in lams], dtype=np.int64)
    d = np.array([lam.d for lam in lams], dtype=np.int64)
    trivial, _, weight = _kernels.orbit_scan(triples, d, all_codes(g))
    return lams, trivial, weight


def _weights_by_degree(g, trivial, weight):
    """{k: set of weights} from a sweep; degree = p0 + l(sigma), p0 in [0, g-1]."""
    out = {k: set() for k in range(4 * g)}
    if trivial is None:
        return out
    lengths = CODE_LENGTHS[all_codes(g)].sum(axis=1)
    rows, cols = np.nonzero(trivial)
    ws = weight[rows, cols]
    qs = lengths[cols]
    pairs = np.unique(np.stack([qs, ws], axis=1), axis=0)
    for q, w in pairs.tolist():
        for p0 in range(g):
            out.setdefault(q + p0, set()).add(w)
    return out


def brute_force_by_degree(g, r, p):
    lams, trivial, weight = _sweep(g, r, p)
    return _weights_by_degree(g, trivial, weight)


def brute_force_weights(g, r, p, k):
    _check_k(g, k)
    return brute_force_by_degree(g, r, p)[k]


def _witnesses(g, r, p, k, weights):
    """Contributions at degree k with weight in ``weights``, over every constituent."""
    out = []
    for lam in enumerate_constituents(EnumerationSpec(g, r, p)):
        for c in boundary_profile(lam).witnesses.get(k, ()):
            if c.weight in weights:
                out.append(c)
    out.sort(key=lambda c: (c.weight, c.source, c.sort_key()))
    return out


@dataclass
class ComparisonEntry:
    p: int
    k: int
    closed_form: list
    brute_force: list
    witnesses: list = field(default_factory=list)

    @property
    def match(self):
        return self.closed_form == self.brute_force

    def to_json(self):
        return {
            "p": self.p,
            "k": self.k,
            "closed_form": self.closed_form,
            "brute_force": self.brute_force,
            "match": self.match,
            "discrepancy_witnesses": [c.to_json() for c in self.witnesses],
        }


@dataclass
class ComparisonReport:
    g: int
    r: int
    entries: list

    def mismatches(self):
        return [e for e in self.entries if not e.match]

    def cell(self, p, k):
        for e in self.entries:
            if e.p == p and e.k == k:
                return e
        raise KeyError((p, k))

    def to_json(self):
        return {
            "g": self.g,
            "r": self.r,
            "entries": [e.to_json() for e in self.entries],
        }

    def to_tsv(self):
        """Rows p, columns k; mismatching cells carry a trailing '!'. Brute-force sets shown."""
        ks = sorted({e.k for e in self.entries})
        ps = sorted({e.p for e in self.entries})
        cells = {(e.p, e.k): e for e in self.entries}
        lines = ["p\\k\t" + "\t".join(str(k) for k in ks)]
        for p in ps:
            row = [str(p)]
            for k in ks:
                e = cells[(p, k)]
                text = ",".join(str(w) for w in e.brute_force)
                row.append(text + ("" if e.match else "!"))
            lines.append("\t".join(row))
        return "\n".join(lines) + "\n"


def _compare_one(args):
    g, r, p = args
    brute = brute_force_by_degree(g, r, p)
    entries = []
    for k in range(4 * g):
        closed = sorted(closed_form_weights(g, r, p, k))
        bf = sorted(brute[k])
        entry = ComparisonEntry(p, k, closed, bf)
        if not entry.match:
            extra = set(bf) - set(closed)
            entry.witnesses = _witnesses(g, r, p, k, extra) if extra else []
        entries.append(entry)
    return entries


def compare(g, r, p_range=None, workers=1):
    if p_range is None:
        p_range = range(0, 6 * r * g + 1)
    jobs = [(g, r, p) for p in p_range]
    entries = [e for chunk in parallel_map(_compare_one, jobs, workers) for e in chunk]
    entries.sort(key=lambda e: (e.p, e.k))
    return ComparisonReport(g, r, entries)


def load_ledger(path=None):
    """Known-discrepancy cells: list of {"g", "r", "p", "k", "note"}."""
    if path is None:
        text = resources.files("picard_boundary").joinpath("data/known_discrepancies.json").read_text()
    else:
        with open(path) as fh:
            text = fh.read()
    return json.loads(text)


def ledger_cells(ledger, g=None, r=None):
    return {
        (c["g"], c["r"], c["p"], c["k"])
        for c in ledger
        if (g is None or c["g"] == g) and (r is None or c["r"] == r)
    }


def unlisted_mismatches(report, ledger):
    known = ledger_cells(ledger, report.g, report.r)
    return [e for e in report.mismatches() if (report.g, report.r, e.p, e.k) not in known]
