# overdurfee/pages/fibers.py
"""
Fibers page: images under phi and the fiber table for one weight.
"""

import pandas as pd
import streamlit as st

from overdurfee.components.partition_core import format_rows, parse_overpartition
from overdurfee.components.weighted_maps import fiber_reports, fiber_table, phi_trace
from overdurfee.utils.figures import fiber_graph

MAX_TABLE_N = 14


def display_fibers():
    """Display one phi trace and the fiber table for (n, k)."""
    st.title("Fibers of phi")
    k = int(st.number_input("k", min_value=2, max_value=5, value=2, step=1))

    tab1, tab2 = st.tabs(["Single overpartition", "Fiber table"])
    with tab1:
        display_trace(k)
    with tab2:
        display_table(k)


def display_trace(k):
    text = st.text_input("Overpartition", value="1,1,1")
    try:
        trace = phi_trace(parse_overpartition(text), k)
    except ValueError as exc:
        st.error(str(exc))
        return

    st.markdown(f"**phi:** `{format_rows(trace.result.parts) or '()'}`")
    if trace.identity:
        st.caption(f"{trace.num_squares} successive squares, at most {k - 1}: phi leaves it unchanged.")
        return
    steps = {
        "shifted overlined parts": format_rows(trace.shifted.parts),
        "square sizes after shift": str(trace.shifted_sizes),
        "rows kept": format_rows(trace.above),
        "rows below": str(trace.below.parts),
        "conjugate of rows below": str(trace.below_conjugate.parts),
        "after adding": format_rows(trace.overlay),
    }
    st.table(pd.DataFrame({"step": list(steps), "value": list(steps.values())}))


def display_table(k):
    n = int(st.number_input("n", min_value=0, max_value=MAX_TABLE_N, value=3, step=1))
    reports = fiber_reports(n, k)
    frame = pd.DataFrame([{
        "beta": format_rows(report.beta.parts) or "()",
        "fiber size": report.fiber_count,
        "literal weight": str(report.literal_weight),
        "agrees": report.agrees,
    } for report in reports])
    st.dataframe(frame, hide_index=True, use_container_width=True)
    st.metric("Sum of fiber sizes", int(frame["fiber size"].sum()) if not frame.empty else 0)
    st.graphviz_chart(fiber_graph(fiber_table(n, k)))
