# overdurfee/utils/diagram.py
"""
Plain-text Ferrers diagrams of dissected overpartitions, used by the
``dissect`` command and the dissection page.
"""

from overdurfee.components.durfee import DurfeeDissection
from overdurfee.components.partition_core import Part
from overdurfee.utils.constants import OVERLINE_MARK

NODE = "o"
OVERLINED_NODE = "*"
BOUNDARY = "|"


def row_shape(row):
    """(value, overlined) of a dissection row; plain integers are non-overlined."""
    return (row.value, row.overlined) if isinstance(row, Part) else (row, False)


def ascii_ferrers(dissection: DurfeeDissection) -> str:
    """
    Text Ferrers diagram, one line per row in Durfee order.

    Each line starts with the part label. Nodes are ``o``; the last node of
    an overlined row is ``*``. A ``|`` marks the right edge of the square
    the row belongs to, and a dashed line closes every square.
    """
    if not dissection.square_sizes:
        return ""
    labels = [
        f"{value}{OVERLINE_MARK if overlined else ''}"
        for level in dissection.level_rows
        for value, overlined in map(row_shape, level)
    ]
    pad = max(len(label) for label in labels)
    lines = []
    for size, level in zip(dissection.square_sizes, dissection.level_rows):
        for row in level:
            value, overlined = row_shape(row)
            cells = [NODE] * value
            if overlined:
                cells[-1] = OVERLINED_NODE
            body = "".join(cells[:size]).ljust(size) + BOUNDARY + "".join(cells[size:])
            label = f"{value}{OVERLINE_MARK if overlined else ''}"
            lines.append(f"{label:>{pad}}  {body.rstrip()}")
        lines.append(" " * (pad + 2) + "-" * size + "+")
    return "\n".join(lines)
