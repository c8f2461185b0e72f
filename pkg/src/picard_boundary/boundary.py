"""Boundary cohomology weights at a cusp.

For a dominant lam the degree-n boundary cohomology is assembled from
Kostant's formula (one line sigma.lam per Weyl element, in unipotent degree
l(sigma)) and the cohomology of the rank g-1 unit group, which is nonzero
only on lines where a_i - c_i is independent of i and then contributes
C(g-1, p0) copies in each degree p0.
"""

from collections import Counter
from dataclasses import dataclass, field
import math

import numpy as np

from . import _kernels
from .lattice import TorusCharacter, degree, hodge_weight, is_dominant
from .weyl import (
    SignType,
    WeylElement,
    all_codes,
    all_elements,
    classify,
    dot_action,
    length,
    FACTORS,
)


def _require_dominant(lam):
    if not is_dominant(lam):
        raise ValueError(f"{lam} is not dominant")


@dataclass(frozen=True)
class Contribution:
    """One line sigma.lam in boundary degree p0 + l(sigma).

    ``m`` is the common value of a_i - c_i on ``mu``.  The weight is then
    p - m*g; for totally negative sigma m is negative and ``twist`` = -m is
    the positive integer with weight p + twist*g.
    """

    sigma: WeylElement
    mu: TorusCharacter
    m: int
    p0: int
    q0: int
    weight: int
    multiplicity: int
    source: TorusCharacter = None

    @property
    def degree(self):
        return self.p0 + self.q0

    @property
    def sign_type(self):
        return classify(self.sigma)

    @property
    def twist(self):
        return -self.m if self.sign_type is SignType.TOTALLY_NEGATIVE else self.m

    def sort_key(self):
        return (self.degree, self.weight, self.sigma.sort_key(), self.p0)

    def to_json(self):
        out = {
            "sigma": str(self.sigma),
            "mu": str(self.mu),
            "m": self.m,
            "p0": self.p0,
            "q0": self.q0,
            "degree": self.degree,
            "weight": self.weight,
            "multiplicity": self.multiplicity,
        }
        if self.source is not None:
            out["lambda"] = str(self.source)
        return out


@dataclass
class WeightProfile:
    degrees: dict = field(default_factory=dict)  # degree -> Counter(weight -> multiplicity)
    witnesses: dict = field(default_factory=dict)  # degree -> [Contribution]

    def add(self, c):
        self.degrees.setdefault(c.degree, Counter())[c.weight] += c.multiplicity
        self.witnesses.setdefault(c.degree, []).append(c)

    def finalize(self):
        self.degrees = {n: Counter(dict(sorted(self.degrees[n].items()))) for n in sorted(self.degrees)}
        self.witnesses = {n: sorted(self.witnesses[n], key=Contribution.sort_key) for n in sorted(self.witnesses)}
        return self

    def is_empty(self):
        return not self.degrees

    def weight_set(self, n):
        return set(self.degrees.get(n, ()))

    def weight_sets(self):
        return {n: sorted(c) for n, c in self.degrees.items()}

    def contributions(self):
        return [c for n in sorted(self.witnesses) for c in self.witnesses[n]]

    def shifted(self, k):
        out = WeightProfile()
        for n, cs in self.witnesses.items():
            for c in cs:
                out.degrees.setdefault(n + k, Counter())[c.weight] += c.multiplicity
            out.witnesses[n + k] = list(cs)
        return out.finalize()

    def to_json(self, lam=None, g=None, shift=0):
        out = {}
        if lam is not None:
            out["lambda"] = str(lam)
            out["g"] = g if g is not None else lam.g
            out["p"] = degree(lam)
        out["degrees"] = {
            str(n): [{"weight": w, "multiplicity": m} for w, m in sorted(c.items())]
            for n, c in sorted(self.degrees.items())
        }
        out["witnesses"] = {
            str(n): [c.to_json() for c in cs] for n, cs in sorted(self.witnesses.items())
        }
        return out


def kostant_cohomology(lam, q):
    """The characters sigma.lam over all sigma of length q."""
    _require_dominant(lam)
    if not 0 <= q <= 3 * lam.g:
        raise ValueError(f"q={q} outside [0, {3 * lam.g}]")
    return [dot_action(s, lam) for s in all_elements(lam.g) if length(s) == q]


def hc_triviality(mu):
    """The common value of a_i - c_i if there is one, else None."""
    diffs = {a - c for a, _, c in mu.triples}
    return diffs.pop() if len(diffs) == 1 else None


def hc_cohomology_multiplicity(g, p0, trivial):
    if not trivial or not 0 <= p0 <= g - 1:
        return 0
    return math.comb(g - 1, p0)


def boundary_profile(lam, g=None):
    """Weight profile of the boundary cohomology of the local system attached to lam."""
    if g is not None and g != lam.g:
        raise ValueError(f"g={g} does not match the {lam.g} triples of {lam}")
    _require_dominant(lam)
    g = lam.g
    triples, d = lam.as_arrays()
    trivial, const, weight = _kernels.orbit_scan(triples[None], np.array([d]), all_codes(g))
    profile = WeightProfile()
    sigmas = np.nonzero(trivial[0])[0]
    for s in sigmas.tolist():
        sigma = WeylElement(tuple(FACTORS[i] for i in _code_of(s, g)))
        mu = dot_action(sigma, lam)
        q0 = length(sigma)
        for p0 in range(g):
            profile.add(
                Contribution(
                    sigma=sigma,
                    mu=mu,
                    m=int(const[0, s]),
                    p0=p0,
                    q0=q0,
                    weight=int(weight[0, s]),
                    multiplicity=math.comb(g - 1, p0),
                    source=lam,
                )
            )
    return profile.finalize()


def _code_of(index, g):
    digits = []
    for _ in range(g):
        index, rem = divmod(index, 6)
        digits.append(rem)
    return digits[::-1]


def kuga_sato_profile(lam, g=None):
    """boundary_profile shifted up by the exterior degree p of lam."""
    return boundary_profile(lam, g).shifted(degree(lam))


def reference_profile(lam):
    """Slow reference: direct loop over sigma with the scalar helpers, no kernel."""
    _require_dominant(lam)
    g = lam.g
    profile = WeightProfile()
    for sigma in all_elements(g):
        mu = dot_action(sigma, lam)
        m = hc_triviality(mu)
        for p0 in range(g):
            mult = hc_cohomology_multiplicity(g, p0, m is not None)
            if mult:
                profile.add(Contribution(sigma, mu, m, p0, length(sigma), hodge_weight(mu), mult, lam))
    return profile.finalize()
