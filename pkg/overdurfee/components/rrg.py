# overdurfee/components/rrg.py
"""
Rogers-Ramanujan-Gordon Overpartitions

Direct test of the Rogers-Ramanujan-Gordon conditions on an overpartition
and the brute-force counting oracle D_{k,i}(n).
"""

from typing import List

from overdurfee.components.partition_core import Overpartition, enumerate_overpartitions
from overdurfee.utils.constants import OVERLINE_REFERENCES
from overdurfee.utils.errors import PreconditionError
from overdurfee.utils.logging import get_logger

logger = get_logger("rrg")


def validate_k(k):
    if not isinstance(k, int) or k < 2:
        raise PreconditionError(f"k must be an integer >= 2, got {k!r}")


def validate_ki(k, i):
    """Reject (k, i) outside k >= 2, 1 <= i <= k."""
    validate_k(k)
    if not isinstance(i, int) or not 1 <= i <= k:
        raise PreconditionError(f"i must be an integer in [1, {k}], got {i!r}")


def _check_reference(overline_reference):
    if overline_reference not in OVERLINE_REFERENCES:
        raise PreconditionError(
            f"overline_reference must be one of {OVERLINE_REFERENCES}, got {overline_reference!r}"
        )


def rrg_violations(op: Overpartition, k: int, i: int, overline_reference: str = "leading") -> List[str]:
    """
    List every reason why op fails the Rogers-Ramanujan-Gordon conditions.

    Args:
        op (Overpartition): Parts in canonical order
        k (int): Window parameter, at least 2
        i (int): The part 1 may occur non-overlined at most i-1 times
        overline_reference (str): "leading" takes the overline status of
            lambda_j, "trailing" that of lambda_{j+k-1}

    Returns:
        list: Human-readable violations; empty when op qualifies
    """
    validate_ki(k, i)
    _check_reference(overline_reference)
    problems = []

    plain_ones = sum(1 for part in op.parts if part.value == 1 and not part.overlined)
    if plain_ones > i - 1:
        problems.append(f"non-overlined 1 occurs {plain_ones} times, more than {i - 1}")

    span = k - 1
    for j in range(len(op.parts) - span):
        top, bottom = op.parts[j], op.parts[j + span]
        reference = top if overline_reference == "leading" else bottom
        needed = 1 if reference.overlined else 2
        if top.value - bottom.value < needed:
            problems.append(
                f"lambda_{j + 1} - lambda_{j + k} = {top.value - bottom.value} < {needed}"
            )
    return problems


def is_rrg(op: Overpartition, k: int, i: int, overline_reference: str = "leading") -> bool:
    """
    Test the multiplicity cap on non-overlined 1s and the k-window difference condition.

    The window condition asks lambda_j - lambda_{j+k-1} >= 1 when lambda_j is
    overlined and >= 2 otherwise, on the canonical order where the
    overlined copy of a value comes first.
    """
    validate_ki(k, i)
    _check_reference(overline_reference)
    parts = op.parts
    if sum(1 for part in parts if part.value == 1 and not part.overlined) > i - 1:
        return False
    span = k - 1
    leading = overline_reference == "leading"
    for j in range(len(parts) - span):
        top, bottom = parts[j], parts[j + span]
        overlined = top.overlined if leading else bottom.overlined
        if top.value - bottom.value < (1 if overlined else 2):
            return False
    return True


def count_dki(n: int, k: int, i: int, overline_reference: str = "leading") -> int:
    """D_{k,i}(n): the number of Rogers-Ramanujan-Gordon overpartitions of n."""
    validate_ki(k, i)
    count = sum(1 for op in enumerate_overpartitions(n) if is_rrg(op, k, i, overline_reference))
    logger.debug("D_{%d,%d}(%d) = %d (%s reading)", k, i, n, count, overline_reference)
    return count
