from hypothesis import strategies as st
import pytest

from picard_boundary.lattice import TorusCharacter


def characters(g=st.integers(1, 3), lo=-5, hi=5, dominant=False):
    coord = st.integers(lo, hi)

    @st.composite
    def build(draw):
        n = draw(g) if not isinstance(g, int) else g
        triples = []
        for _ in range(n):
            t = sorted(draw(st.tuples(coord, coord, coord)), reverse=True) if dominant else draw(
                st.tuples(coord, coord, coord)
            )
            triples.append(tuple(t))
        return TorusCharacter(tuple(triples), draw(st.integers(-3 * hi, 3 * hi)))

    return build()


@pytest.fixture
def golden():
    return TorusCharacter(((1, 0, -1), (0, 0, 0)), -1)


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[n])
