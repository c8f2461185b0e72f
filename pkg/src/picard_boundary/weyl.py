"""The Weyl group S3^g and its rho-shifted dot action."""

from dataclasses import dataclass
from enum import Enum
import itertools

import numpy as np

from ._kernels import PERMS, SHIFTS
from .errors import BudgetExceeded, CharacterParseError
from .lattice import TorusCharacter

FACTORS = ("e", "s12", "s23", "r123", "r132", "s13")
FACTOR_LENGTH = {"e": 0, "s12": 1, "s23": 1, "r123": 2, "r132": 2, "s13": 3}
CYCLES = {"e": "id", "s12": "(12)", "s23": "(23)", "r123": "(123)", "r132": "(132)", "s13": "(13)"}
_CODE = {name: i for i, name in enumerate(FACTORS)}
_ALIASES = {"id": "e", "1": "e"}

MAX_G = 12


class SignType(Enum):
    TOTALLY_POSITIVE = "TotallyPositive"
    TOTALLY_NEGATIVE = "TotallyNegative"
    MIXED = "Mixed"


@dataclass(frozen=True)
class WeylElement:
    factors: tuple

    def __post_init__(self):
        factors = tuple(_ALIASES.get(f, f) for f in self.factors)
        if not factors:
            raise ValueError("a Weyl element needs g >= 1 factors")
        for f in factors:
            if f not in _CODE:
                raise ValueError(f"unknown S3 element {f!r}")
        object.__setattr__(self, "factors", factors)

    @property
    def g(self):
        return len(self.factors)

    @property
    def codes(self):
        return tuple(_CODE[f] for f in self.factors)

    def __str__(self):
        return ";".join(self.factors)

    def sort_key(self):
        return self.codes


def parse_weyl(text, g=None):
    toks = [t.strip() for t in text.strip().split(";")]
    for i, t in enumerate(toks, start=1):
        if _ALIASES.get(t, t) not in _CODE:
            raise CharacterParseError(f"factor {i} is not an S3 element: {t!r}", position=i)
    if g is not None and len(toks) != g:
        raise CharacterParseError(f"expected {g} factors, got {len(toks)}", position=len(toks))
    return WeylElement(tuple(toks))


def _check_budget(g, max_g):
    if g < 1:
        raise ValueError("g must be positive")
    if g > max_g:
        raise BudgetExceeded(f"6^{g} Weyl elements exceeds the enumeration budget (g <= {max_g})")


def all_elements(g, max_g=MAX_G):
    """All 6^g elements, lexicographic in the factor order e < s12 < s23 < r123 < r132 < s13."""
    _check_budget(g, max_g)
    return [WeylElement(f) for f in itertools.product(FACTORS, repeat=g)]


def all_codes(g, max_g=MAX_G):
    """(6^g, g) int64 array of factor indices, same order as all_elements."""
    _check_budget(g, max_g)
    return np.array(list(itertools.product(range(6), repeat=g)), dtype=np.int64).reshape(-1, g)


def length(sigma):
    return sum(FACTOR_LENGTH[f] for f in sigma.factors)


def classify(sigma):
    lengths = [FACTOR_LENGTH[f] for f in sigma.factors]
    if all(x <= 1 for x in lengths):
        return SignType.TOTALLY_POSITIVE
    if all(x >= 2 for x in lengths):
        return SignType.TOTALLY_NEGATIVE
    return SignType.MIXED


def dot_action(sigma, lam):
    """sigma.(lam + rho) - rho with rho_i = (1, 0, -1); d is untouched."""
    if sigma.g != lam.g:
        raise ValueError(f"g mismatch: sigma has {sigma.g} factors, lambda has {lam.g} triples")
    out = []
    for code, t in zip(sigma.codes, lam.triples):
        out.append(tuple(int(t[PERMS[code, j]] + SHIFTS[code, j]) for j in range(3)))
    return TorusCharacter(tuple(out), lam.d)


def length_counts(g):
    """Coefficients of (1 + 2t + 2t^2 + t^3)^g."""
    if g < 1:
        raise ValueError("g must be positive")
    poly = [1]
    for _ in range(g):
        poly = np.convolve(poly, [1, 2, 2, 1]).tolist()
    return [int(x) for x in poly]


CODE_LENGTHS = np.array([FACTOR_LENGTH[f] for f in FACTORS], dtype=np.int64)
CODE_SIGN = np.array([0, 0, 0, 1, 1, 1], dtype=np.int64)  # 0 positive, 1 negative factor
