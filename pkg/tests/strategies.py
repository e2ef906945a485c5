"""Hypothesis strategies for small operation tables."""

import numpy as np
from hypothesis import strategies as st

from ilokit import IloModel


@st.composite
def ilo_tables(draw, min_order=1, max_order=4):
    n = draw(st.integers(min_order, max_order))
    cols = [draw(st.permutations(range(n))) for _ in range(n)]
    return np.array(cols, dtype=np.int64).T


@st.composite
def ilo_models(draw, min_order=1, max_order=4):
    return IloModel.from_table(draw(ilo_tables(min_order, max_order)))


@st.composite
def any_tables(draw, max_order=3):
    n = draw(st.integers(1, max_order))
    cells = draw(st.lists(st.integers(0, n - 1), min_size=n * n, max_size=n * n))
    return np.array(cells, dtype=np.int64).reshape(n, n)


@st.composite
def permutations_of(draw, n, fix_zero=False):
    if fix_zero:
        return np.array([0] + list(draw(st.permutations(range(1, n)))), dtype=np.int64)
    return np.array(draw(st.permutations(range(n))), dtype=np.int64)
