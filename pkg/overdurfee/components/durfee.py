# overdurfee/components/durfee.py
"""
Durfee Module

Generalized Durfee squares of overpartitions and their successive Durfee
square dissection, together with the brute-force counting oracles for
overpartitions whose part count equals the square size and for
overpartitions with a bounded number of successive squares.
"""

from collections import Counter
from dataclasses import dataclass
from typing import Dict, Sequence, Tuple, Union

from overdurfee.components.partition_core import (
    Overpartition,
    Part,
    enumerate_overpartitions,
    num_overlined,
    rows_to_json,
)
from overdurfee.utils.errors import InvariantViolation, PreconditionError
from overdurfee.utils.logging import get_logger

logger = get_logger("durfee")

Row = Union[Part, int]


@dataclass(frozen=True)
class DurfeeDissection:
    """
    Successive Durfee squares of an overpartition.

    ``level_rows[0]`` holds the N_1 rows of the generalized square as
    ``Part`` rows in Durfee order; deeper levels hold plain integers, N_j
    rows each. Concatenating every level gives back the Durfee order.
    """
    square_sizes: Tuple[int, ...]
    level_rows: Tuple[Tuple[Row, ...], ...]

    @property
    def num_squares(self) -> int:
        return len(self.square_sizes)

    def rows(self) -> Tuple[Part, ...]:
        """All rows in Durfee order, deeper levels as non-overlined parts."""
        flat = list(self.level_rows[0]) if self.level_rows else []
        for level in self.level_rows[1:]:
            flat.extend(Part(value, False) for value in level)
        return tuple(flat)


def durfee_order(op: Overpartition) -> Tuple[Part, ...]:
    """Overlined parts in decreasing order, followed by the non-overlined parts in decreasing order."""
    overlined = tuple(part for part in op.parts if part.overlined)
    plain = tuple(part for part in op.parts if not part.overlined)
    return overlined + plain


def generalized_durfee_size(op: Overpartition) -> int:
    """
    Size of the generalized Durfee square.

    The largest N such that the number of overlined parts plus the number
    of non-overlined parts >= N is at least N; 0 for the empty overpartition.

    Args:
        op (Overpartition): The overpartition to measure

    Returns:
        int: The square size N
    """
    overlined = num_overlined(op)
    plain = [part.value for part in op.parts if not part.overlined]
    size = 0
    for candidate in range(1, len(op.parts) + 1):
        if overlined + sum(1 for value in plain if value >= candidate) >= candidate:
            size = candidate
        else:
            break
    return size


def durfee_square_size(parts: Sequence[int]) -> int:
    """Classical Durfee square of a partition: the largest d with parts[d-1] >= d."""
    size = 0
    for index, value in enumerate(parts, start=1):
        if value >= index:
            size = index
        else:
            break
    return size


def dissect(op: Overpartition) -> DurfeeDissection:
    """
    Successive Durfee square dissection.

    Level 1 is the first N_1 rows of the Durfee order. The rows after it
    form an ordinary partition whose Durfee square gives level 2, the rows
    below that square give level 3, and so on until nothing is left.

    Args:
        op (Overpartition): The overpartition to dissect

    Returns:
        DurfeeDissection: Square sizes and the rows of each level
    """
    ordered = durfee_order(op)
    first = generalized_durfee_size(op)
    if not ordered:
        return DurfeeDissection((), ())

    below = ordered[first:]
    if any(part.overlined or part.value > first for part in below):
        raise InvariantViolation(
            f"rows below the generalized square of size {first} are not plain parts <= {first}: {below}"
        )

    sizes = [first]
    levels = [tuple(ordered[:first])]
    remaining = [part.value for part in below]
    while remaining:
        size = durfee_square_size(remaining)
        sizes.append(size)
        levels.append(tuple(remaining[:size]))
        remaining = remaining[size:]
    return DurfeeDissection(tuple(sizes), tuple(levels))


def num_successive_squares(op: Overpartition) -> int:
    return len(dissect(op).square_sizes)


def count_g(n: int) -> int:
    """Number of overpartitions of n whose number of parts equals the generalized Durfee size."""
    return sum(1 for op in enumerate_overpartitions(n) if len(op.parts) == generalized_durfee_size(op))


def count_at_most_squares(n: int, j: int) -> int:
    """
    Number of overpartitions of n with at most j successive Durfee squares.

    Args:
        n (int): Weight
        j (int): Maximum number of squares, at least 1

    Returns:
        int: The brute-force count
    """
    if not isinstance(j, int) or j < 1:
        raise PreconditionError(f"j must be a positive integer, got {j!r}")
    return sum(1 for op in enumerate_overpartitions(n) if num_successive_squares(op) <= j)


def count_by_durfee_and_overlines(n: int) -> Dict[Tuple[int, int], int]:
    """Table (generalized Durfee size, number of overlined parts) -> count over all overpartitions of n."""
    table = Counter(
        (generalized_durfee_size(op), num_overlined(op)) for op in enumerate_overpartitions(n)
    )
    logger.debug("durfee/overline table for n=%d has %d cells", n, len(table))
    return dict(table)


def dissection_to_json(dissection: DurfeeDissection) -> dict:
    levels = []
    for index, level in enumerate(dissection.level_rows):
        levels.append(rows_to_json(level) if index == 0 else list(level))
    return {"sizes": list(dissection.square_sizes), "levels": levels}
