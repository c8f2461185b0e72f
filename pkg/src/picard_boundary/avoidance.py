"""Decide whether the boundary part cut out by lam avoids motivic weights 0 and -1.

On the Hodge side this means: boundary cohomology in degree n carries
neither weight n + p nor n + p + 1.
"""

from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple, Optional

from .boundary import Contribution, boundary_profile
from .constituents import EnumerationSpec, is_constituent
from .lattice import degree, is_dominant, is_kostant_parallel


class Verdict(Enum):
    NOT_DOMINANT = "NotDominant"
    NOT_CONSTITUENT = "NotConstituent"
    BOUNDARY_TRIVIAL = "BoundaryTrivial"
    INTERIOR_MOTIVE_DEFINED = "InteriorMotiveDefined"
    WEIGHT_OBSTRUCTION = "WeightObstruction"


class Avoidance(NamedTuple):
    avoids: bool
    witness: Optional[Contribution]

    def __bool__(self):
        return self.avoids


def forbidden_weights(n, p):
    return (n + p, n + p + 1)


def avoids_weights(lam, g=None, profile=None):
    """Scan the boundary profile; the witness is the first offending contribution in canonical order."""
    if not is_dominant(lam):
        raise ValueError(f"{lam} is not dominant")
    if profile is None:
        profile = boundary_profile(lam, g)
    p = degree(lam)
    for n in sorted(profile.witnesses):
        bad = forbidden_weights(n, p)
        for c in profile.witnesses[n]:
            if c.weight in bad:
                return Avoidance(False, c)
    return Avoidance(True, None)


@dataclass(frozen=True)
class Classification:
    verdict: Verdict
    witness: Optional[Contribution] = None

    def __post_init__(self):
        if (self.verdict is Verdict.WEIGHT_OBSTRUCTION) != (self.witness is not None):
            raise ValueError("a witness is attached exactly to WeightObstruction verdicts")


def classify(lam, r, g=None):
    if g is not None and g != lam.g:
        raise ValueError(f"g={g} does not match the {lam.g} triples of {lam}")
    if not is_dominant(lam):
        return Classification(Verdict.NOT_DOMINANT)
    p = degree(lam)
    if not is_constituent(lam, EnumerationSpec(lam.g, r, p)):
        return Classification(Verdict.NOT_CONSTITUENT)
    if not is_kostant_parallel(lam):
        return Classification(Verdict.BOUNDARY_TRIVIAL)
    result = avoids_weights(lam)
    if result.avoids:
        return Classification(Verdict.INTERIOR_MOTIVE_DEFINED)
    return Classification(Verdict.WEIGHT_OBSTRUCTION, result.witness)


def classification_to_json(lam, r, cls):
    return {
        "lambda": str(lam),
        "g": lam.g,
        "r": r,
        "p": degree(lam),
        "verdict": cls.verdict.value,
        "witness": cls.witness.to_json() if cls.witness is not None else None,
    }
