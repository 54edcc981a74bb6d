import matplotlib

matplotlib.use("Agg")

import pytest
from hypothesis import strategies as st

from overdurfee.components.partition_core import canonicalize


@st.composite
def overpartitions(draw, max_value=9, max_parts=8):
    """Random overpartition: the first copy of each value may be overlined."""
    values = draw(st.lists(st.integers(1, max_value), max_size=max_parts))
    rows, seen = [], set()
    for value in sorted(values, reverse=True):
        overlined = value not in seen and draw(st.booleans())
        seen.add(value)
        rows.append((value, overlined))
    return canonicalize(rows)


@pytest.fixture
def alpha():
    return canonicalize([(7, False), (6, False), (6, False), (5, True), (3, True), (3, False), (2, False), (1, True)])
