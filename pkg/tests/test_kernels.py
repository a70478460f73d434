"""Compiled and pure-Python elimination kernels against each other and a Leibniz oracle."""

from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from psets import _backend, _pykernels


def leibniz_det(m):
    n = len(m)
    total = 0
    for perm in permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        prod = 1
        for i in range(n):
            prod *= m[i][perm[i]]
        total += -prod if inv % 2 else prod
    return total


def rank_by_minors(m, ncols):
    """Largest k with a nonzero k x k minor."""
    from itertools import combinations

    nrows = len(m)
    for k in range(min(nrows, ncols), 0, -1):
        for rows in combinations(range(nrows), k):
            for cols in combinations(range(ncols), k):
                if leibniz_det([[m[r][c] for c in cols] for r in rows]):
                    return k
    return 0


KERNELS = [pytest.param(_pykernels.eliminate, id="python")]
if _backend.eliminate_native is not None:
    KERNELS.append(pytest.param(_backend.eliminate_native, id="native"))


@st.composite
def int_matrices(draw, max_rows=5, max_cols=5, elements=st.integers(-4, 4)):
    r = draw(st.integers(0, max_rows))
    c = draw(st.integers(0, max_cols))
    return [[draw(elements) for _ in range(c)] for _ in range(r)], c


@pytest.mark.parametrize("kernel", KERNELS)
@given(data=int_matrices(elements=st.sampled_from([0, 0, 0, 1, -1, 2, 3, -4])))
@settings(max_examples=300, deadline=None)
def test_rank_matches_minors(kernel, data):
    m, c = data
    assert kernel(m, c)[0] == rank_by_minors(m, c)


@pytest.mark.parametrize("kernel", KERNELS)
@given(n=st.integers(0, 5), data=st.data())
@settings(max_examples=300, deadline=None)
def test_det_matches_leibniz(kernel, n, data):
    m = [[data.draw(st.integers(-5, 5)) for _ in range(n)] for _ in range(n)]
    r, pivot, sign = kernel(m, n)
    expected = leibniz_det(m)
    assert (sign * pivot if r == n else 0) == expected
    assert (r == n) == (expected != 0)


def test_input_not_modified():
    m = [[1, 2], [3, 4]]
    _pykernels.eliminate(m, 2)
    assert m == [[1, 2], [3, 4]]


def test_empty_shapes():
    assert _pykernels.eliminate([], 0) == (0, 1, 1)
    assert _pykernels.eliminate([[], []], 0) == (0, 1, 1)
    assert _pykernels.eliminate([], 3) == (0, 1, 1)


@pytest.mark.skipif(_backend.eliminate_native is None, reason="compiled kernel not built")
@given(data=int_matrices(max_rows=7, max_cols=7, elements=st.integers(-(10**6), 10**6)))
@settings(max_examples=300, deadline=None)
def test_native_agrees_with_python(data):
    m, c = data
    assert _backend.eliminate_native(m, c) == _pykernels.eliminate(m, c)


@pytest.mark.skipif(_backend.eliminate_native is None, reason="compiled kernel not built")
def test_native_overflow_falls_back():
    big = 2**62
    m = [[big, 3, 1], [5, big, 7], [1, 1, big]]
    assert _backend.eliminate_native(m, 3) == _pykernels.eliminate(m, 3)
    huge = [[2**80, 1], [1, 2**80]]
    r, p, s = _backend.eliminate_native(huge, 2)
    assert (r, s * p) == (2, 2**160 - 1)


def test_mutation_switch_perturbs_only_deficient_ranks():
    singular = [[1, 1], [1, 1]]
    full = [[1, 0], [0, 1]]
    with _backend.rank_mutation():
        assert _backend.eliminate(singular, 2)[0] == 2
        assert _backend.eliminate(full, 2)[0] == 2
    assert _backend.eliminate(singular, 2)[0] == 1
    assert not _backend.rank_mutation_enabled()
