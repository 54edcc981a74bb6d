import matplotlib.pyplot as plt
from matplotlib.figure import Figure

from overdurfee.components.durfee import dissect
from overdurfee.components.partition_core import parse_overpartition
from overdurfee.components.weighted_maps import fiber_table
from overdurfee.utils.diagram import ascii_ferrers
from overdurfee.utils.figures import ferrers_figure, fiber_graph


def test_ascii_first_figure(alpha):
    lines = ascii_ferrers(dissect(alpha)).splitlines()
    assert lines[:7] == [
        "5o  oooo* |",
        "3o  oo*   |",
        "1o  *     |",
        " 7  oooooo|o",
        " 6  oooooo|",
        " 6  oooooo|",
        "    ------+",
    ]
    assert lines[7:] == [
        " 3  oo|o",
        " 2  oo|",
        "    --+",
    ]


def test_ascii_empty():
    assert ascii_ferrers(dissect(parse_overpartition(""))) == ""


def test_figure(alpha):
    fig = ferrers_figure(dissect(alpha), title="alpha")
    assert isinstance(fig, Figure)
    assert len(fig.axes[0].patches) == 2
    plt.close(fig)


def test_fiber_graph():
    source = fiber_graph(fiber_table(3, 2)).source
    assert '"lam 2,1" -> "beta 3"' in source
    assert source.count("->") == 8
