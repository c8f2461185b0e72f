from collections import Counter
import itertools

from hypothesis import given, strategies as st
import pytest

from picard_boundary.errors import BudgetExceeded, CharacterParseError
from picard_boundary.lattice import TorusCharacter
from picard_boundary.weyl import (
    CYCLES,
    FACTORS,
    SignType,
    WeylElement,
    all_elements,
    classify,
    dot_action,
    length,
    length_counts,
    parse_weyl,
)

from conftest import characters

RHO = (1, 0, -1)


def cycle_map(cycle):
    """Cycle notation '(123)' -> dict on {1, 2, 3}."""
    out = {1: 1, 2: 2, 3: 3}
    if cycle == "id":
        return out
    pts = [int(ch) for ch in cycle.strip("()")]
    for i, x in enumerate(pts):
        out[x] = pts[(i + 1) % len(pts)]
    return out


def generic_dot(name, triple):
    """sigma(x + rho) - rho with sigma moving position j to sigma(j)."""
    sigma = cycle_map(CYCLES[name])
    x = [t + r for t, r in zip(triple, RHO)]
    y = [0, 0, 0]
    for j in (1, 2, 3):
        y[sigma[j] - 1] = x[j - 1]
    return tuple(v - r for v, r in zip(y, RHO))


def inversions(name):
    sigma = cycle_map(CYCLES[name])
    perm = [sigma[j] for j in (1, 2, 3)]
    return sum(1 for i, j in itertools.combinations(range(3), 2) if perm[i] > perm[j])


def test_all_elements_sizes():
    assert len(all_elements(1)) == 6
    assert len(all_elements(2)) == 36
    assert [str(s) for s in all_elements(1)] == list(FACTORS)
    with pytest.raises(BudgetExceeded):
        all_elements(13)


def test_lengths():
    assert length(WeylElement(("id",))) == 0
    assert length(WeylElement(("s13",))) == 3
    assert length(WeylElement(("s12", "r123"))) == 3


@pytest.mark.parametrize("name", FACTORS)
def test_length_is_inversion_count(name):
    assert length(WeylElement((name,))) == inversions(name)


def test_classify():
    assert classify(WeylElement(("e", "s23"))) is SignType.TOTALLY_POSITIVE
    assert classify(WeylElement(("r123", "s13"))) is SignType.TOTALLY_NEGATIVE
    assert classify(WeylElement(("s12", "r123"))) is SignType.MIXED


def test_dot_action_examples():
    lam = TorusCharacter(((1, 0, -1),), -1)
    assert dot_action(WeylElement(("e",)), lam) == lam
    assert dot_action(WeylElement(("s13",)), lam) == TorusCharacter(((-3, 0, 3),), -1)
    golden = TorusCharacter(((1, 0, -1), (0, 0, 0)), -1)
    assert dot_action(WeylElement(("r123", "s13")), golden) == TorusCharacter(
        ((-3, 2, 1), (-2, 0, 2)), -1
    )


def test_dot_action_g_mismatch():
    with pytest.raises(ValueError):
        dot_action(WeylElement(("e", "e")), TorusCharacter(((0, 0, 0),), 0))


@pytest.mark.parametrize("name", FACTORS)
@given(triple=st.tuples(*[st.integers(-6, 6)] * 3))
def test_table_matches_generic_rho_shift(name, triple):
    lam = TorusCharacter((triple,), 0)
    assert dot_action(WeylElement((name,)), lam).triples[0] == generic_dot(name, triple)


def test_length_counts():
    assert length_counts(1) == [1, 2, 2, 1]
    assert length_counts(2) == [1, 4, 8, 10, 8, 4, 1]


@pytest.mark.parametrize("g", [1, 2, 3, 4])
def test_length_counts_match_enumeration(g):
    hist = Counter(length(s) for s in all_elements(g))
    counts = length_counts(g)
    assert [hist[q] for q in range(3 * g + 1)] == counts
    assert sum(counts) == 6**g


@given(characters(g=st.integers(1, 2), dominant=True))
def test_orbit_of_dominant_is_free(lam):
    orbit = {dot_action(s, lam) for s in all_elements(lam.g)}
    assert len(orbit) == 6**lam.g
    assert all(mu.d == lam.d and mu.g == lam.g for mu in orbit)


@pytest.mark.parametrize("g", [1, 2, 3])
def test_mixed_iff_both_kinds_of_factor(g):
    for s in all_elements(g):
        lens = [length(WeylElement((f,))) for f in s.factors]
        both = any(x <= 1 for x in lens) and any(x >= 2 for x in lens)
        assert (classify(s) is SignType.MIXED) == both


def test_parse_weyl():
    assert parse_weyl("r123;s13") == WeylElement(("r123", "s13"))
    assert parse_weyl("e;id").factors == ("e", "e")
    with pytest.raises(CharacterParseError):
        parse_weyl("r123;s14")
    with pytest.raises(CharacterParseError):
        parse_weyl("e", g=2)
