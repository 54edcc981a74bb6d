# overdurfee/components/weighted_maps.py
"""
Weighted Maps Module

This module provides the bijection between pairs (gamma, delta) and
overpartitions whose part count equals their generalized Durfee size, the
surjection phi from all overpartitions onto overpartitions with at most
k-1 successive Durfee squares, its fibers, the printed product weight,
and the driver that checks the weighted identity
pbar(n) = sum of fiber sizes over the target set.
"""

import itertools
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Callable, Dict, Iterable, Iterator, List, Optional, Tuple

from overdurfee.components.durfee import dissect, generalized_durfee_size, num_successive_squares
from overdurfee.components.partition_core import (
    DistinctDelta,
    Overpartition,
    Part,
    Partition,
    add_overlay_rows,
    canonicalize,
    conjugate,
    count_overpartitions,
    enumerate_overpartitions,
    format_overpartition,
    format_rows,
    overpartition_to_json,
    sigma,
)
from overdurfee.components.rrg import count_dki, validate_k
from overdurfee.utils.errors import InvariantViolation, OverpartitionParseError, PreconditionError
from overdurfee.utils.logging import get_logger

logger = get_logger("weighted_maps")


@dataclass(frozen=True)
class Thm21Pair:
    """A partition gamma into N distinct parts and distinct delta parts in [0, N-1]."""
    gamma: Partition
    delta: DistinctDelta

    def __post_init__(self):
        parts = self.gamma.parts
        if any(parts[index] <= parts[index + 1] for index in range(len(parts) - 1)):
            raise PreconditionError(f"gamma must have distinct parts: {parts}")
        if self.delta.bound != len(parts):
            raise PreconditionError(
                f"delta bound {self.delta.bound} does not match the {len(parts)} parts of gamma"
            )

    @classmethod
    def of(cls, gamma, delta) -> "Thm21Pair":
        gamma = tuple(gamma)
        return cls(Partition(gamma), DistinctDelta(tuple(delta), len(gamma)))

    @property
    def weight(self) -> int:
        return sigma(self.gamma) + sum(self.delta.parts)


@dataclass(frozen=True)
class PhiTrace:
    """Intermediate objects of one application of phi."""
    source: Overpartition
    k: int
    num_squares: int
    first_size: int
    result: Overpartition
    shifted: Optional[Overpartition] = None
    shifted_sizes: Tuple[int, ...] = ()
    above: Tuple[Part, ...] = ()
    below: Partition = Partition(())
    below_conjugate: Partition = Partition(())
    overlay: Tuple[Part, ...] = ()

    @property
    def identity(self) -> bool:
        return self.shifted is None


@dataclass(frozen=True)
class FiberReport:
    """All preimages of beta under phi, compared with the printed product weight."""
    beta: Overpartition
    fiber: Tuple[Overpartition, ...]
    literal_weight: int
    agrees: bool

    @property
    def fiber_count(self) -> int:
        return len(self.fiber)


@dataclass
class WeightedIdentityReport:
    """Outcome of checking pbar(n) against the fiber sizes over the target set."""
    n: int
    k: int
    pbar: int
    beta_set: Tuple[Overpartition, ...]
    fiber_counts: Dict[Overpartition, int]
    literal_weights: Dict[Overpartition, int]
    fiber_sum: int
    literal_sum: int
    dkk_count: int
    lands_in_target: bool
    fixes_target: bool
    passed: bool
    disagreements: List[dict] = field(default_factory=list)

    @property
    def beta_set_matches_dkk(self) -> bool:
        return len(self.beta_set) == self.dkk_count


def thm21_forward(pair: Thm21Pair) -> Overpartition:
    """
    Build the overpartition of a (gamma, delta) pair.

    Every part of gamma starts overlined; for each i from 1 to N, if i-1 is
    a part of delta then i-1 is added to gamma_i and its overline removed.

    Args:
        pair (Thm21Pair): gamma with N distinct parts, delta in [0, N-1]

    Returns:
        Overpartition: N parts, generalized Durfee size N
    """
    rows = []
    for index, value in enumerate(pair.gamma.parts):
        if index in pair.delta:
            rows.append((value + index, False))
        else:
            rows.append((value, True))
    return canonicalize(rows)


def thm21_inverse(op: Overpartition) -> Thm21Pair:
    """
    Recover (gamma, delta) from an overpartition in the g-set.

    gamma starts as the overlined values. Each non-overlined value alpha,
    largest first, is placed as alpha - m for the smallest m >= 0 with
    alpha - m > gamma_{m+1} (gamma_{m+1} = 0 past the end), and m joins delta.

    Args:
        op (Overpartition): #parts equal to the generalized Durfee size

    Returns:
        Thm21Pair: The preimage pair

    Raises:
        PreconditionError: If op is not in the g-set
    """
    size = len(op.parts)
    if generalized_durfee_size(op) != size:
        raise PreconditionError(
            f"{format_overpartition(op)} has {size} parts but generalized Durfee size "
            f"{generalized_durfee_size(op)}"
        )
    gamma = [part.value for part in op.parts if part.overlined]
    delta = []
    for value in (part.value for part in op.parts if not part.overlined):
        m = 0
        while value - m <= (gamma[m] if m < len(gamma) else 0):
            m += 1
        gamma.insert(m, value - m)
        delta.append(m)
    try:
        return Thm21Pair.of(gamma, sorted(delta, reverse=True))
    except PreconditionError as exc:
        raise InvariantViolation(f"inverse of {format_overpartition(op)} is not a valid pair: {exc}")


def _distinct_parts(count: int, budget: int, below: int) -> Iterator[Tuple[int, ...]]:
    if count == 0:
        yield ()
        return
    floor = count * (count - 1) // 2  # smallest sum of count-1 distinct positive parts
    for first in range(min(below - 1, budget), count - 1, -1):
        if first + floor > budget:
            continue
        for rest in _distinct_parts(count - 1, budget - first, first):
            yield (first,) + rest


def enumerate_thm21_pairs(max_weight: int) -> Iterator[Thm21Pair]:
    """Every valid (gamma, delta) with sigma(gamma) + sigma(delta) <= max_weight."""
    if max_weight < 0:
        raise PreconditionError(f"max_weight must be non-negative, got {max_weight}")
    size = 0
    while size * (size + 1) // 2 <= max_weight:
        for gamma in _distinct_parts(size, max_weight, max_weight + 1):
            room = max_weight - sum(gamma)
            for width in range(size + 1):
                for delta in itertools.combinations(range(size - 1, -1, -1), width):
                    if sum(delta) <= room:
                        yield Thm21Pair.of(gamma, delta)
        size += 1


def phi_trace(lam: Overpartition, k: int) -> PhiTrace:
    """
    Apply phi and keep every intermediate object.

    With at most k-1 successive squares lam is returned unchanged.
    Otherwise N_1 is added to each overlined part (giving lambda'), the rows
    below the (k-1)-th square of lambda' are conjugated and added row-wise
    to the rows above, and N_1 is subtracted again from each overlined part.

    Args:
        lam (Overpartition): Any overpartition
        k (int): At least 2

    Returns:
        PhiTrace: The trace; ``trace.result`` is phi(lam, k)
    """
    validate_k(k)
    sizes = dissect(lam).square_sizes
    if len(sizes) <= k - 1:
        return PhiTrace(lam, k, len(sizes), sizes[0] if sizes else 0, lam)

    first = sizes[0]
    shifted = canonicalize((v + first, True) if o else (v, False) for v, o in lam.parts)
    shifted_sizes = dissect(shifted).square_sizes
    if len(shifted_sizes) != len(sizes) or shifted_sizes[0] != first:
        raise InvariantViolation(
            f"shifting {format_overpartition(lam)} by {first} changed its squares "
            f"from {sizes} to {shifted_sizes}"
        )

    cut = sum(shifted_sizes[:k - 1])
    above, below_rows = shifted.parts[:cut], shifted.parts[cut:]
    if any(part.overlined for part in below_rows):
        raise InvariantViolation(f"overlined row below square {k - 1} of {format_overpartition(shifted)}")
    below = Partition(tuple(part.value for part in below_rows))
    below_conjugate = conjugate(below)
    overlay = tuple(add_overlay_rows(above, below_conjugate.parts))

    overlined_values = [part.value for part in overlay if part.overlined]
    if len(overlined_values) != len(set(overlined_values)):
        raise InvariantViolation(f"overlined rows collide after adding {below_conjugate.parts}: {format_rows(overlay)}")
    try:
        result = canonicalize((v - first, True) if o else (v, False) for v, o in overlay)
    except OverpartitionParseError as exc:
        raise InvariantViolation(str(exc))

    logger.debug("phi(%s, k=%d) = %s", format_overpartition(lam), k, format_overpartition(result))
    return PhiTrace(
        source=lam,
        k=k,
        num_squares=len(sizes),
        first_size=first,
        result=result,
        shifted=shifted,
        shifted_sizes=shifted_sizes,
        above=tuple(above),
        below=below,
        below_conjugate=below_conjugate,
        overlay=overlay,
    )


def phi(lam: Overpartition, k: int) -> Overpartition:
    """The surjection onto overpartitions with at most k-1 successive Durfee squares."""
    return phi_trace(lam, k).result


def _require_target(beta: Overpartition, k: int):
    validate_k(k)
    squares = num_successive_squares(beta)
    if squares > k - 1:
        raise PreconditionError(
            f"{format_overpartition(beta)} has {squares} successive squares, more than {k - 1}"
        )


def weight_literal(beta: Overpartition, k: int) -> int:
    """
    The printed product weight of beta.

    1 when beta has fewer than k-1 squares; otherwise beta' is beta with N_1
    added to each overlined part, and the weight is the product over
    i = 1..N_{k-1} of (beta'_i - beta'_{i+1} + 1 - eps(beta'_{i+1})), where
    eps marks an overlined part and rows past the end are a plain 0.
    """
    _require_target(beta, k)
    sizes = dissect(beta).square_sizes
    if len(sizes) < k - 1:
        return 1
    first, last = sizes[0], sizes[k - 2]
    rows = canonicalize((v + first, True) if o else (v, False) for v, o in beta.parts).parts
    weight = 1
    for index in range(last):
        current = rows[index].value
        following = rows[index + 1] if index + 1 < len(rows) else Part(0, False)
        weight *= current - following.value + 1 - (1 if following.overlined else 0)
    return weight


def fibers(beta: Overpartition, k: int) -> FiberReport:
    """
    Collect phi^{-1}(beta) by applying phi to every overpartition of sigma(beta).

    Args:
        beta (Overpartition): At most k-1 successive squares
        k (int): At least 2

    Returns:
        FiberReport: The fiber in enumeration order and the literal weight
    """
    _require_target(beta, k)
    fiber = tuple(lam for lam in enumerate_overpartitions(sigma(beta)) if phi(lam, k) == beta)
    literal = weight_literal(beta, k)
    return FiberReport(beta, fiber, literal, literal == len(fiber))


def fiber_table(n: int, k: int) -> Dict[Overpartition, List[Overpartition]]:
    """Group every overpartition of n by its image under phi, in one sweep."""
    validate_k(k)
    table: Dict[Overpartition, List[Overpartition]] = defaultdict(list)
    for lam in enumerate_overpartitions(n):
        table[phi(lam, k)].append(lam)
    return dict(table)


def fiber_reports(n: int, k: int) -> List[FiberReport]:
    """FiberReport for every target of weight n, in enumeration order, from one sweep of phi."""
    table = fiber_table(n, k)
    reports = []
    for beta in enumerate_overpartitions(n):
        if num_successive_squares(beta) > k - 1:
            continue
        fiber = tuple(table.get(beta, ()))
        literal = weight_literal(beta, k)
        reports.append(FiberReport(beta, fiber, literal, literal == len(fiber)))
    return reports


def weighted_identity_check(target_count: int, subset: Iterable, weight: Callable) -> Tuple[int, int, bool]:
    """
    Check P_T(n) = sum over pi in S of w(pi).

    Returns:
        tuple: (P_T(n), the weighted sum, whether they are equal)
    """
    total = sum(weight(item) for item in subset)
    return target_count, total, target_count == total


def verify_weighted_identity(n: int, k: int, with_literal: bool = True) -> WeightedIdentityReport:
    """
    Check pbar(n) against the fiber sizes of phi over overpartitions with at most k-1 squares.

    Args:
        n (int): Weight
        k (int): At least 2
        with_literal (bool): Also evaluate the printed product weight for each beta

    Returns:
        WeightedIdentityReport: Counts, per-beta weights and the pass flag
    """
    validate_k(k)
    everything = tuple(enumerate_overpartitions(n))
    target = tuple(op for op in everything if num_successive_squares(op) <= k - 1)
    target_set = set(target)
    table = fiber_table(n, k)

    lands = all(image in target_set for image in table)
    fixes = all(phi(beta, k) == beta for beta in target)
    counts = {beta: len(table.get(beta, ())) for beta in target}
    pbar = count_overpartitions(n)
    _, fiber_sum, balanced = weighted_identity_check(pbar, target, counts.get)

    literal = {}
    disagreements = []
    if with_literal:
        for beta in target:
            literal[beta] = weight_literal(beta, k)
            if literal[beta] != counts[beta]:
                disagreements.append({
                    "n": n,
                    "k": k,
                    "beta": format_overpartition(beta),
                    "fiber_count": counts[beta],
                    "literal_weight": literal[beta],
                })
        if disagreements:
            logger.warning("n=%d k=%d: literal weight differs from fiber size for %d of %d targets",
                           n, k, len(disagreements), len(target))

    report = WeightedIdentityReport(
        n=n,
        k=k,
        pbar=pbar,
        beta_set=target,
        fiber_counts=counts,
        literal_weights=literal,
        fiber_sum=fiber_sum,
        literal_sum=sum(literal.values()),
        dkk_count=count_dki(n, k, k),
        lands_in_target=lands,
        fixes_target=fixes,
        passed=balanced and lands and fixes,
        disagreements=disagreements,
    )
    if not report.passed:
        logger.error("weighted identity fails at n=%d k=%d: pbar=%d, fiber sum=%d", n, k, pbar, fiber_sum)
    return report


def fiber_report_to_json(report: FiberReport) -> dict:
    return {
        "beta": overpartition_to_json(report.beta),
        "fiber": [overpartition_to_json(lam) for lam in report.fiber],
        "literal_weight": str(report.literal_weight),
        "fiber_count": report.fiber_count,
        "agrees": report.agrees,
    }
