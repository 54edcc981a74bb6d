# overdurfee/utils/figures.py
"""
Graphical renderings for the explorer pages.

``ferrers_figure`` draws a dissected overpartition with matplotlib and
``fiber_graph`` shows the fibers of phi as a graphviz digraph. The
command-line path only needs ``diagram.ascii_ferrers`` and never imports
this module.
"""

from typing import Dict, List

import graphviz
import matplotlib.pyplot as plt
from matplotlib.patches import Rectangle

from overdurfee.components.durfee import DurfeeDissection
from overdurfee.components.partition_core import Overpartition, format_overpartition
from overdurfee.utils.diagram import row_shape


def ferrers_figure(dissection: DurfeeDissection, title: str = ""):
    """
    Draw the Ferrers diagram with each successive square outlined.

    Args:
        dissection (DurfeeDissection): The dissected overpartition
        title (str): Optional axes title

    Returns:
        matplotlib.figure.Figure: The figure
    """
    rows = [row_shape(row) for level in dissection.level_rows for row in level]
    width = max((value for value, _ in rows), default=1)
    fig, ax = plt.subplots(figsize=(max(3, width * 0.5), max(2, len(rows) * 0.5)))

    for index, (value, overlined) in enumerate(rows):
        y = -index
        xs = list(range(value))
        ax.scatter(xs, [y] * value, color="#3b82f6", s=80, zorder=2)
        if overlined:
            ax.scatter([value - 1], [y], facecolors="white", edgecolors="#ef4444", s=140, linewidths=2, zorder=3)

    top = 0
    for size in dissection.square_sizes:
        ax.add_patch(Rectangle((-0.5, -(top + size) + 0.5), size, size,
                               fill=False, edgecolor="#f59e0b", linewidth=2))
        top += size

    ax.set_xlim(-1, width)
    ax.set_ylim(-max(len(rows), 1), 1)
    ax.set_aspect("equal")
    ax.axis("off")
    if title:
        ax.set_title(title)
    fig.tight_layout()
    return fig


def fiber_graph(table: Dict[Overpartition, List[Overpartition]]) -> graphviz.Digraph:
    """Digraph with an edge lambda -> phi(lambda) for every overpartition in the table."""
    graph = graphviz.Digraph()
    graph.attr(rankdir="LR")
    for beta, fiber in table.items():
        target = f"beta {format_overpartition(beta) or '()'}"
        graph.node(target, f"{format_overpartition(beta) or '()'}  [{len(fiber)}]",
                   shape="box", style="filled", fillcolor="lightpink")
        for lam in fiber:
            source = f"lam {format_overpartition(lam) or '()'}"
            graph.node(source, format_overpartition(lam) or "()", shape="box",
                       style="filled", fillcolor="lightblue")
            graph.edge(source, target)
    return graph
