# overdurfee/pages/home.py
"""
Home page of the explorer.

Counts for a single n and the coefficients of the generating functions,
side by side with their brute-force counterparts.
"""

import pandas as pd
import streamlit as st

from overdurfee.components.durfee import count_at_most_squares, count_g
from overdurfee.components.partition_core import count_overpartitions, count_partitions
from overdurfee.components.qseries import series_by_name
from overdurfee.components.rrg import count_dki
from overdurfee.utils.constants import DEFAULT_SERIES_ORDER, SERIES_NAMES

# brute-force columns get slow beyond this weight
MAX_BRUTE_FORCE_N = 25


def display_home():
    """Display the counts table and the series viewer."""
    st.markdown("<h1 style='color: #3b82f6;'>Overpartition Explorer</h1>", unsafe_allow_html=True)
    st.markdown(
        "Overpartitions, their successive Durfee squares and the "
        "Rogers-Ramanujan-Gordon counts D<sub>k,i</sub>(n).",
        unsafe_allow_html=True,
    )

    col1, col2 = st.columns([2, 3])
    with col1:
        display_counts()
    with col2:
        display_series()


def display_counts():
    st.subheader("Counts")
    n = st.number_input("n", min_value=0, max_value=MAX_BRUTE_FORCE_N, value=5, step=1)
    k = st.number_input("k", min_value=2, max_value=6, value=2, step=1, key="count_k")
    i = st.slider("i", min_value=1, max_value=int(k), value=int(k))

    n, k, i = int(n), int(k), int(i)
    rows = [
        {"count": "p(n)", "value": count_partitions(n)},
        {"count": "pbar(n)", "value": count_overpartitions(n)},
        {"count": "g(n)", "value": count_g(n)},
        {"count": f"D_{k},{i}(n)", "value": count_dki(n, k, i)},
        {"count": f"D_{k},{k}(n)", "value": count_dki(n, k, k)},
        {"count": f"at most {k - 1} squares", "value": count_at_most_squares(n, k - 1)},
    ]
    st.dataframe(pd.DataFrame(rows).astype(str), hide_index=True, use_container_width=True)


def display_series():
    st.subheader("Generating functions")
    name = st.selectbox("Series", SERIES_NAMES)
    order = st.number_input("Order", min_value=0, max_value=60, value=DEFAULT_SERIES_ORDER, step=1)
    k = i = None
    if name in ("dki", "dkk", "at-most-squares"):
        k = int(st.number_input("k", min_value=2, max_value=6, value=2, step=1, key="series_k"))
    if name == "dki":
        i = int(st.slider("i", min_value=1, max_value=k, value=k, key="series_i"))

    series = series_by_name(name, int(order), k=k, i=i)
    if name == "durfee-refined":
        cells = sorted(series.coefficients().items(), key=lambda item: (item[0][1], item[0][0]))
        frame = pd.DataFrame([{"n": n, "overlined parts": m, "coefficient": str(c)} for (m, n), c in cells])
    else:
        frame = pd.DataFrame({"n": range(series.order + 1), "coefficient": [str(c) for c in series.coefficients()]})
    st.dataframe(frame, hide_index=True, use_container_width=True)
