# overdurfee/pages/dissection.py
"""
Dissection page: successive Durfee squares of an overpartition.
"""

import matplotlib.pyplot as plt
import streamlit as st

from overdurfee.components.durfee import dissect, generalized_durfee_size
from overdurfee.components.partition_core import format_rows, parse_overpartition
from overdurfee.components.rrg import rrg_violations
from overdurfee.utils.diagram import ascii_ferrers
from overdurfee.utils.figures import ferrers_figure


def display_dissection():
    """Parse an overpartition and show its squares, rows and Ferrers diagram."""
    st.title("Successive Durfee Squares")
    text = st.text_input("Overpartition (o marks an overlined part)", value="7,6,6,5o,3o,3,2,1o")

    try:
        op = parse_overpartition(text)
    except ValueError as exc:
        st.error(str(exc))
        return

    dissection = dissect(op)
    st.markdown(f"**Canonical form:** `{format_rows(op.parts) or '()'}`")
    st.markdown(f"**Square sizes:** `{dissection.square_sizes}`")
    if len(op.parts) == generalized_durfee_size(op):
        st.info("The number of parts equals the generalized Durfee size.")

    if not dissection.square_sizes:
        return

    col1, col2 = st.columns(2)
    with col1:
        st.code(ascii_ferrers(dissection), language=None)
    with col2:
        fig = ferrers_figure(dissection)
        st.pyplot(fig)
        plt.close(fig)

    st.subheader("Rogers-Ramanujan-Gordon conditions")
    k = int(st.number_input("k", min_value=2, max_value=8, value=3, step=1))
    i = int(st.slider("i", min_value=1, max_value=k, value=k))
    problems = rrg_violations(op, k, i)
    if problems:
        for problem in problems:
            st.warning(problem)
    else:
        st.success(f"Counted by D_{k},{i}({sum(op.values)}).")
