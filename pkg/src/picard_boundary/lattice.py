"""Integer characters ((a_i, b_i, c_i)_{1<=i<=g}, d) of the maximal torus.

Text form: ``a1,b1,c1;a2,b2,c2;...|d``.
"""

from dataclasses import dataclass
import re

import numpy as np

from .errors import CharacterParseError

# coordinates beyond this are rejected before they reach int64 kernels
COORD_LIMIT = 1 << 40

_INT = re.compile(r"^-?\d+$")


@dataclass(frozen=True, order=True)
class TorusCharacter:
    triples: tuple
    d: int

    def __post_init__(self):
        triples = tuple(tuple(int(x) for x in t) for t in self.triples)
        if not triples:
            raise ValueError("a character needs at least one triple (g >= 1)")
        for t in triples:
            if len(t) != 3:
                raise ValueError(f"triple {t} does not have 3 entries")
        object.__setattr__(self, "triples", triples)
        object.__setattr__(self, "d", int(self.d))
        for x in self.coords():
            if abs(x) >= COORD_LIMIT:
                raise OverflowError(f"coordinate {x} out of range")

    @property
    def g(self):
        return len(self.triples)

    def coords(self):
        """Flat coordinate tuple (a1, b1, c1, ..., d); defines the canonical order."""
        return tuple(x for t in self.triples for x in t) + (self.d,)

    @classmethod
    def from_coords(cls, coords):
        coords = tuple(int(x) for x in coords)
        if (len(coords) - 1) % 3 or len(coords) < 4:
            raise ValueError(f"{len(coords)} coordinates is not 3g + 1")
        body = coords[:-1]
        return cls(tuple(body[i : i + 3] for i in range(0, len(body), 3)), coords[-1])

    @classmethod
    def zero(cls, g, d=0):
        return cls(((0, 0, 0),) * g, d)

    def __str__(self):
        return ";".join(",".join(str(x) for x in t) for t in self.triples) + f"|{self.d}"

    def __add__(self, other):
        if not isinstance(other, TorusCharacter):
            return NotImplemented
        if other.g != self.g:
            raise ValueError("g mismatch")
        return TorusCharacter.from_coords(
            x + y for x, y in zip(self.coords(), other.coords())
        )

    def as_arrays(self):
        return np.array(self.triples, dtype=np.int64), self.d


def parse_character(text, g=None):
    """Parse ``a1,b1,c1;...;ag,bg,cg|d``; whitespace around tokens is ignored.

    Raises CharacterParseError naming the offending token.
    """
    if not isinstance(text, str):
        raise CharacterParseError("character text must be a string")
    s = text.strip()
    if s.count("|") != 1:
        raise CharacterParseError(f"expected exactly one '|' in {text!r}")
    body, dpart = s.split("|")
    groups = body.split(";")
    if g is not None and len(groups) != g:
        raise CharacterParseError(
            f"expected {g} triples, got {len(groups)} in {text!r}", position=len(groups)
        )
    triples = []
    for i, grp in enumerate(groups, start=1):
        toks = [t.strip() for t in grp.split(",")]
        if len(toks) != 3:
            raise CharacterParseError(
                f"triple {i} has {len(toks)} entries, expected 3", position=i
            )
        vals = []
        for j, tok in enumerate(toks, start=1):
            if not _INT.match(tok):
                raise CharacterParseError(
                    f"token {j} of triple {i} is not an integer: {tok!r}", position=(i, j)
                )
            vals.append(int(tok))
        triples.append(tuple(vals))
    dtok = dpart.strip()
    if not _INT.match(dtok):
        raise CharacterParseError(f"similitude token is not an integer: {dtok!r}", position="d")
    return TorusCharacter(tuple(triples), int(dtok))


def degree(lam):
    """Exterior degree p = -2d - sum(a_i + b_i + c_i)."""
    return -2 * lam.d - sum(sum(t) for t in lam.triples)


def is_dominant(lam):
    return all(a >= b >= c for a, b, c in lam.triples)


def is_regular(lam):
    return all(a > b > c for a, b, c in lam.triples)


def is_parallel(lam):
    return all(t == lam.triples[0] for t in lam.triples)


def hodge_weight(mu):
    """Boundary Hodge weight -2d - sum(2a_i + b_i)."""
    return -2 * mu.d - sum(2 * a + b for a, b, _ in mu.triples)


def duality(lam, r):
    """((-c_i, -b_i, -a_i), -3rg - d): swaps degree p with 6rg - p."""
    return TorusCharacter(
        tuple((-c, -b, -a) for a, b, c in lam.triples), -3 * r * lam.g - lam.d
    )


@dataclass(frozen=True)
class KostantParallelWitness:
    m: int
    coverage: tuple  # per index, a sorted tuple drawn from ("I", "J", "K")


def _condition_values(triple):
    a, b, c = triple
    return {"I": a - c, "J": b - c - 1, "K": a - b - 1}


def kostant_parallel_witnesses(lam):
    """All m for which every index meets one of a-c=m, b-c-1=m, a-b-1=m.

    Sorted by m; empty iff lam is not Kostant-parallel.
    """
    values = [_condition_values(t) for t in lam.triples]
    candidates = sorted({v for vals in values for v in vals.values()})
    out = []
    for m in candidates:
        coverage = tuple(tuple(tag for tag in "IJK" if vals[tag] == m) for vals in values)
        if all(coverage):
            out.append(KostantParallelWitness(m, coverage))
    return out


def is_kostant_parallel(lam):
    return bool(kostant_parallel_witnesses(lam))
