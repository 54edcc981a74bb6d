# overdurfee/components/partition_core.py
"""
Partition Core Module

This module holds the data model for partitions and overpartitions, the
Ferrers-graph operations used by the constructions (conjugation and
row-wise addition), the text/JSON codecs and the exhaustive enumerators
that act as counting oracles for every generating function in the package.
"""

import itertools
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, List, NamedTuple, Sequence, Tuple, Union

from overdurfee.utils.constants import OVERLINE_MARK, PART_SEPARATOR
from overdurfee.utils.errors import OverpartitionParseError, PreconditionError
from overdurfee.utils.logging import get_logger

logger = get_logger("partition_core")

_PART_PATTERN = re.compile(r"^([0-9]+)(" + OVERLINE_MARK + r"?)$")
_DIGITS = re.compile(r"[0-9]+")


class Part(NamedTuple):
    """One row of an overpartition."""
    value: int
    overlined: bool


@lru_cache(maxsize=None)
def _part(value, overlined) -> Part:
    return Part(int(value), bool(overlined))


def _canonical_key(part: Part):
    # decreasing value, overlined copy first at equal value
    return (-part.value, not part.overlined)


@dataclass(frozen=True)
class Partition:
    """A weakly decreasing sequence of positive integers."""
    parts: Tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        for index, value in enumerate(parts):
            if value < 1:
                raise PreconditionError(f"partition parts must be positive, got {value}")
            if index and parts[index - 1] < value:
                raise PreconditionError(f"partition parts must be weakly decreasing: {parts}")

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, index):
        return self.parts[index]


@dataclass(frozen=True)
class Overpartition:
    """
    A partition in which the first occurrence of each value may be overlined.

    Parts are stored in canonical order: decreasing by value, and at equal
    value the overlined part precedes the non-overlined ones. Build one from
    rows in arbitrary order with ``canonicalize``.
    """
    parts: Tuple[Part, ...] = ()

    def __post_init__(self):
        parts = tuple(p if type(p) is Part else _part(p[0], p[1]) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        seen_overlined = set()
        for index, part in enumerate(parts):
            if part.value < 1:
                raise PreconditionError(f"overpartition parts must be positive, got {part.value}")
            if part.overlined:
                if part.value in seen_overlined:
                    raise PreconditionError(f"value {part.value} is overlined twice")
                seen_overlined.add(part.value)
            if index and _canonical_key(parts[index - 1]) > _canonical_key(part):
                raise PreconditionError(f"overpartition parts are not in canonical order: {parts}")

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __str__(self):
        return format_overpartition(self)

    @property
    def values(self) -> Tuple[int, ...]:
        return tuple(part.value for part in self.parts)


@dataclass(frozen=True)
class DistinctDelta:
    """Distinct nonnegative parts, all at most ``bound - 1``."""
    parts: Tuple[int, ...]
    bound: int

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        for index, value in enumerate(parts):
            if not 0 <= value <= self.bound - 1:
                raise PreconditionError(f"delta part {value} outside [0, {self.bound - 1}]")
            if index and parts[index - 1] <= value:
                raise PreconditionError(f"delta parts must be strictly decreasing: {parts}")

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __contains__(self, value):
        return value in self.parts


def canonicalize(rows: Iterable[Tuple[int, bool]]) -> Overpartition:
    """
    Sort raw (value, overlined) rows into a canonical overpartition.

    Args:
        rows: Rows in any order

    Returns:
        Overpartition: The rows in canonical order

    Raises:
        OverpartitionParseError: If a value is overlined more than once
    """
    parts = sorted((_part(v, o) for v, o in rows), key=_canonical_key)
    overlined = [p.value for p in parts if p.overlined]
    if len(overlined) != len(set(overlined)):
        raise OverpartitionParseError(f"duplicate overlined value in {format_rows(parts)}")
    return Overpartition(tuple(parts))


def sigma(x: Union[Partition, Overpartition, Sequence]) -> int:
    """Sum of all part values; overlines do not change the weight."""
    if isinstance(x, Overpartition):
        return sum(part.value for part in x.parts)
    if isinstance(x, Partition):
        return sum(x.parts)
    return sum(part[0] if isinstance(part, tuple) else part for part in x)


def num_parts(op: Overpartition) -> int:
    return len(op.parts)


def num_overlined(op: Overpartition) -> int:
    return sum(1 for part in op.parts if part.overlined)


def conjugate(p: Partition) -> Partition:
    """
    Transpose the Ferrers graph of a partition.

    Args:
        p (Partition): The partition to conjugate

    Returns:
        Partition: Column lengths of p, longest first
    """
    if not p.parts:
        return Partition(())
    return Partition(tuple(
        sum(1 for row in p.parts if row > column) for column in range(p.parts[0])
    ))


def add_overlay_rows(rows: Sequence[Tuple[int, bool]], b: Sequence[int]) -> List[Part]:
    """
    Add the rows of ``b`` to the rows of ``rows`` in the order given.

    Row i of the result keeps the overline flag of row i of ``rows``; the
    row order is preserved, nothing is re-sorted.
    """
    if len(b) > len(rows):
        raise PreconditionError(
            f"cannot overlay {len(b)} rows onto an overpartition with {len(rows)} rows"
        )
    if any(value < 1 for value in b):
        raise PreconditionError(f"overlay rows must be positive: {tuple(b)}")
    padded = list(b) + [0] * (len(rows) - len(b))
    return [Part(value + extra, overlined) for (value, overlined), extra in zip(rows, padded)]


def add_overlay(a: Overpartition, b: Partition) -> Overpartition:
    """
    Row-wise sum a + b of Ferrers graphs; rows that are overlined in a stay overlined.

    Args:
        a (Overpartition): Base overpartition, rows taken in canonical order
        b (Partition): Rows to add, top aligned

    Returns:
        Overpartition: The re-canonicalized sum
    """
    return canonicalize(add_overlay_rows(a.parts, b.parts))


def _partitions_bounded(n: int, largest: int) -> Iterator[Tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions_bounded(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _partitions_of(n: int) -> Tuple[Partition, ...]:
    return tuple(Partition(parts) for parts in _partitions_bounded(n, n))


@lru_cache(maxsize=None)
def _overpartitions_of(n: int) -> Tuple[Overpartition, ...]:
    result = []
    for partition in _partitions_of(n):
        groups = [(value, len(list(run))) for value, run in itertools.groupby(partition.parts)]
        for mask in itertools.product((False, True), repeat=len(groups)):
            parts = []
            for (value, multiplicity), overlined in zip(groups, mask):
                if overlined:
                    parts.append(_part(value, True))
                    parts.extend([_part(value, False)] * (multiplicity - 1))
                else:
                    parts.extend([_part(value, False)] * multiplicity)
            result.append(Overpartition(tuple(parts)))
    logger.debug("enumerated %d overpartitions of %d", len(result), n)
    return tuple(result)


def _check_n(n: int):
    if not isinstance(n, int) or n < 0:
        raise PreconditionError(f"n must be a non-negative integer, got {n!r}")


def enumerate_partitions(n: int) -> Iterator[Partition]:
    """Yield every partition of n once, in lexicographically decreasing order."""
    _check_n(n)
    return iter(_partitions_of(n))


def enumerate_overpartitions(n: int) -> Iterator[Overpartition]:
    """
    Yield every overpartition of n once.

    Order is lexicographic on (underlying partition, overline mask), the mask
    running over the distinct values from largest to smallest.
    """
    _check_n(n)
    return iter(_overpartitions_of(n))


def count_partitions(n: int) -> int:
    _check_n(n)
    return len(_partitions_of(n))


def count_overpartitions(n: int) -> int:
    """Number of overpartitions of n: each partition contributes 2 ** (number of distinct values)."""
    _check_n(n)
    return sum(2 ** len(set(p.parts)) for p in _partitions_of(n))


def format_rows(rows: Iterable[Tuple[int, bool]]) -> str:
    """Render rows in the order given, e.g. ``6o,5o,7,5,5``."""
    return PART_SEPARATOR.join(
        f"{value}{OVERLINE_MARK if overlined else ''}" for value, overlined in rows
    )


def format_overpartition(op: Overpartition) -> str:
    """Render an overpartition in canonical order with no spaces."""
    return format_rows(op.parts)


def parse_overpartition(text: str) -> Overpartition:
    """
    Parse the ``part ("," part)*`` grammar, where ``part := DIGITS ["o"]``.

    Args:
        text (str): Input such as ``"7,6,6,5o,3o,3,2,1o"``; surrounding
            whitespace is ignored and the empty string is the empty overpartition

    Returns:
        Overpartition: The parsed value in canonical order

    Raises:
        OverpartitionParseError: On malformed tokens, zero values or a value
            overlined twice
    """
    text = text.strip()
    if not text:
        return Overpartition(())
    rows = []
    for token in text.split(PART_SEPARATOR):
        token = token.strip()
        match = _PART_PATTERN.match(token)
        if not match:
            raise OverpartitionParseError(f"malformed part {token!r}")
        value = int(match.group(1))
        if value < 1:
            raise OverpartitionParseError(f"parts must be positive, got {token!r}")
        rows.append((value, bool(match.group(2))))
    return canonicalize(rows)


def format_partition(p: Union[Partition, DistinctDelta, Sequence[int]]) -> str:
    return PART_SEPARATOR.join(str(value) for value in p)


def parse_partition(text: str, allow_zero: bool = False) -> Tuple[int, ...]:
    """
    Parse comma-separated integers, sorted into decreasing order.

    Args:
        text (str): Input such as ``"7,6,5,2,1"``
        allow_zero (bool): Accept 0 as a part (used for delta)

    Returns:
        tuple: The parts, largest first
    """
    text = text.strip()
    if not text:
        return ()
    values = []
    for token in text.split(PART_SEPARATOR):
        token = token.strip()
        if not _DIGITS.fullmatch(token):
            raise OverpartitionParseError(f"malformed part {token!r}")
        value = int(token)
        if value == 0 and not allow_zero:
            raise OverpartitionParseError("parts must be positive, got '0'")
        values.append(value)
    return tuple(sorted(values, reverse=True))


def overpartition_to_json(op: Overpartition) -> list:
    return [{"v": part.value, "o": part.overlined} for part in op.parts]


def rows_to_json(rows: Iterable[Tuple[int, bool]]) -> list:
    return [{"v": value, "o": overlined} for value, overlined in rows]


def overpartition_from_json(obj: list) -> Overpartition:
    try:
        rows = [(int(item["v"]), bool(item["o"])) for item in obj]
    except (KeyError, TypeError, ValueError) as exc:
        raise OverpartitionParseError(f"malformed overpartition JSON: {exc}")
    if any(value < 1 for value, _ in rows):
        raise OverpartitionParseError("parts must be positive")
    return canonicalize(rows)
