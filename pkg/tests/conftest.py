import random
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from gwdt.algebra import GaussRat, LinForm, MultiPoly, RatFunc

ACCEPTANCE_LINES: list[str] = []

# forms that may appear in random denominators
FORMS = [LinForm(1, -1, 0), LinForm(1, 0, -1), LinForm(0, 1, -1), LinForm(1, 1, -2), LinForm(2, -1, 0)]
GRID = [(g, k1, k2) for g in range(1, 5) for k1 in range(-5, -1) for k2 in range(-5, -1)]


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def rng():
    return random.Random(20261015)


gauss = st.builds(
    GaussRat,
    st.fractions(min_value=-5, max_value=5, max_denominator=4),
    st.sampled_from([0, 0, 0, 1, -2, Fraction(1, 3)]),
)
exps = st.tuples(*(st.integers(0, 3),) * 3)
polys = st.dictionaries(exps, gauss, max_size=5).map(MultiPoly)
dens = st.dictionaries(st.sampled_from(FORMS), st.integers(0, 2), max_size=2)
ratfuncs = st.builds(RatFunc, polys, dens)
linforms = st.tuples(*(st.integers(-3, 3),) * 3).filter(any).map(lambda c: LinForm.normalize(*c)[1])
