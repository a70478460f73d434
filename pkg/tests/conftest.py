import json
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import strategies as st

from psets.exactla import SymMatrix

FIXTURES = Path(__file__).parent / "fixtures"

ACCEPTANCE_LINES = []


def path_matrix(n):
    return SymMatrix([[int(abs(i - j) == 1) for j in range(n)] for i in range(n)])


EDGE_ISO = SymMatrix([[0, 1, 0], [1, 0, 0], [0, 0, 0]])


@pytest.fixture(scope="session")
def golden():
    return json.loads((FIXTURES / "golden.json").read_text())


# small values with plenty of zeros so that singular structure is common
ENTRY = st.sampled_from([0, 0, 0, 0, 1, 1, -1, 2, -2, Fraction(1, 2), Fraction(-3, 2), 3])


@st.composite
def sym_matrices(draw, min_n=0, max_n=6, entries=ENTRY):
    n = draw(st.integers(min_n, max_n))
    a = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            a[i][j] = a[j][i] = draw(entries)
    return SymMatrix(a)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
