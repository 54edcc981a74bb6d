# overdurfee/pages/about.py
import graphviz
import streamlit as st


def display_about():
    """
    Display the About page with an overview of the constructions and
    how the verification suites fit together.
    """
    st.markdown("<h1 style='text-align: center; color: #3b82f6;'>About the Explorer</h1>", unsafe_allow_html=True)

    st.markdown("""
    ## Overview

    An overpartition is a partition in which the first occurrence of each
    value may be overlined. The generalized Durfee square of an
    overpartition counts its overlined parts together with the large
    non-overlined ones; the rows below it are dissected by ordinary Durfee
    squares, one after another.

    Every count shown here is computed twice: once by enumerating
    overpartitions and once from a generating function with exact integer
    coefficients.
    """)

    st.subheader("How the pieces connect")

    graph = graphviz.Digraph()
    graph.attr(rankdir='TB', size='8,8')

    graph.node('enum', 'Enumerate\noverpartitions', shape='box', style='filled', fillcolor='lightblue')
    graph.node('dissect', 'Successive Durfee\nsquares', shape='box', style='filled', fillcolor='lightblue')
    graph.node('rrg', 'RRG conditions\nD_k,i(n)', shape='box', style='filled', fillcolor='lightyellow')
    graph.node('phi', 'phi onto at most\nk-1 squares', shape='box', style='filled', fillcolor='lightyellow')
    graph.node('pairs', '(gamma, delta)\nbijection', shape='box', style='filled', fillcolor='lightyellow')
    graph.node('series', 'q-series\n(exact)', shape='box', style='filled', fillcolor='orange')
    graph.node('verify', 'Identity suites', shape='box', style='filled', fillcolor='lightpink')

    graph.edge('enum', 'dissect')
    graph.edge('enum', 'rrg')
    graph.edge('dissect', 'phi')
    graph.edge('dissect', 'pairs')
    graph.edge('rrg', 'verify')
    graph.edge('phi', 'verify')
    graph.edge('pairs', 'verify')
    graph.edge('series', 'verify')

    st.graphviz_chart(graph)

    st.markdown("""
    ## Command line

    The same operations are available without the browser:

    ```
    python -m overdurfee count pbar --n 4
    python -m overdurfee dissect "7,6,6,5o,3o,3,2,1o"
    python -m overdurfee verify weighted --max-n 14 --k 2
    ```
    """)
