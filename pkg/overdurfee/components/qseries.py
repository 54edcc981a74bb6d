# overdurfee/components/qseries.py
"""
Q-Series Module

Truncated formal power series in q with exact integer coefficients, and
the generating functions for partitions, overpartitions, the g-set,
Rogers-Ramanujan-Gordon overpartitions and overpartitions with a bounded
number of successive Durfee squares.

Arithmetic runs on a sympy sparse polynomial ring in (a, q) over ZZ. The
marker a only appears in the refined Durfee series; every plain QSeries
lives in the a-free part of the same ring. Truncation is always in q.
"""

from functools import lru_cache
from typing import Callable, Dict, Iterator, List, NamedTuple, Optional, Tuple

from sympy import ZZ
from sympy.polys.ring_series import rs_mul, rs_series_inversion, rs_trunc
from sympy.polys.rings import ring

from overdurfee.components.rrg import validate_k, validate_ki
from overdurfee.utils.errors import PreconditionError
from overdurfee.utils.logging import get_logger

logger = get_logger("qseries")

_RING, _A, _Q = ring("a,q", ZZ)


def _check_order(order):
    if not isinstance(order, int) or order < 0:
        raise PreconditionError(f"series order must be a non-negative integer, got {order!r}")


class QSeries:
    """
    A power series in q known modulo q^(order+1).

    Operations between series of different orders truncate to the smaller
    order. Coefficients are Python integers of arbitrary size.
    """

    __slots__ = ("order", "_poly")

    def __init__(self, poly, order: int):
        _check_order(order)
        self.order = order
        self._poly = rs_trunc(poly, _Q, order + 1)

    @classmethod
    def from_coefficients(cls, coeffs, order: Optional[int] = None) -> "QSeries":
        coeffs = list(coeffs)
        if order is None:
            order = max(len(coeffs) - 1, 0)
        poly = _RING.from_dict({(0, n): c for n, c in enumerate(coeffs) if c})
        return cls(poly, order)

    @classmethod
    def one(cls, order: int) -> "QSeries":
        return cls(_RING.one, order)

    @classmethod
    def zero(cls, order: int) -> "QSeries":
        return cls(_RING.zero, order)

    @classmethod
    def monomial(cls, power: int, order: int, coefficient: int = 1) -> "QSeries":
        return cls(_RING.from_dict({(0, power): coefficient}) if coefficient else _RING.zero, order)

    def __getitem__(self, n: int) -> int:
        if not 0 <= n <= self.order:
            raise IndexError(f"coefficient {n} outside 0..{self.order}")
        return int(self._poly.get((0, n), 0))

    def coefficients(self) -> List[int]:
        return [self[n] for n in range(self.order + 1)]

    def __add__(self, other):
        if isinstance(other, int):
            other = QSeries.monomial(0, self.order, other)
        if not isinstance(other, QSeries):
            return NotImplemented
        return QSeries(self._poly + other._poly, min(self.order, other.order))

    __radd__ = __add__

    def __neg__(self):
        return QSeries(-self._poly, self.order)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return QSeries(self._poly * other, self.order)
        if not isinstance(other, QSeries):
            return NotImplemented
        order = min(self.order, other.order)
        return QSeries(rs_mul(self._poly, other._poly, _Q, order + 1), order)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        return self.order == other.order and self._poly == other._poly

    def __hash__(self):
        return hash((self.order, tuple(self.coefficients())))

    def __repr__(self):
        terms = [f"{c}*q^{n}" for n, c in enumerate(self.coefficients()) if c]
        return f"QSeries({' + '.join(terms) or '0'} + O(q^{self.order + 1}))"


class RefinedQSeries:
    """A series in q (truncated at ``order``) whose coefficients are polynomials in the marker a."""

    __slots__ = ("order", "_poly")

    def __init__(self, poly, order: int):
        _check_order(order)
        self.order = order
        self._poly = rs_trunc(poly, _Q, order + 1)

    def coefficient(self, m: int, n: int) -> int:
        """Coefficient of a^m q^n."""
        if not 0 <= n <= self.order:
            raise IndexError(f"q-degree {n} outside 0..{self.order}")
        return int(self._poly.get((m, n), 0))

    def coefficients(self) -> Dict[Tuple[int, int], int]:
        """Nonzero coefficients keyed by (a-degree, q-degree)."""
        return {(m, n): int(c) for (m, n), c in self._poly.items()}

    def max_a_degree(self) -> int:
        return max((m for (m, _) in self._poly.keys()), default=0)

    def at_a_equals_one(self) -> QSeries:
        totals: Dict[int, int] = {}
        for (_, n), c in self._poly.items():
            totals[n] = totals.get(n, 0) + int(c)
        return QSeries.from_coefficients(
            [totals.get(n, 0) for n in range(self.order + 1)], self.order
        )

    def __add__(self, other):
        if not isinstance(other, RefinedQSeries):
            return NotImplemented
        return RefinedQSeries(self._poly + other._poly, min(self.order, other.order))

    def __eq__(self, other):
        if not isinstance(other, RefinedQSeries):
            return NotImplemented
        return self.order == other.order and self._poly == other._poly

    def __hash__(self):
        return hash((self.order, tuple(sorted(self.coefficients().items()))))


class Monomial(NamedTuple):
    """The signed monomial sign * q^power used as the base of a q-Pochhammer symbol."""
    sign: int
    power: int


def series_add(s: QSeries, t: QSeries) -> QSeries:
    return s + t


def series_mul(s: QSeries, t: QSeries) -> QSeries:
    return s * t


def series_scale(s: QSeries, c: int) -> QSeries:
    return s * c


def invert_unit(s: QSeries) -> QSeries:
    """
    Multiplicative inverse of a series with constant term +1 or -1.

    Args:
        s (QSeries): The series to invert

    Returns:
        QSeries: t with s * t = 1 modulo q^(order+1)

    Raises:
        PreconditionError: If the constant term is not a unit over the integers
    """
    constant = s[0]
    if constant == -1:
        return -invert_unit(-s)
    if constant != 1:
        raise PreconditionError(f"constant term {constant} is not a unit over the integers")
    return QSeries(rs_series_inversion(s._poly, _Q, s.order + 1), s.order)


@lru_cache(maxsize=None)
def _poch(sign: int, power: int, n: int, order: int) -> QSeries:
    product = _RING.one
    for i in range(n):
        exponent = power + i
        if exponent > order:
            break
        product = rs_mul(product, _RING.one - sign * _Q ** exponent, _Q, order + 1)
    return QSeries(product, order)


def poch_finite(x: Monomial, n: int, order: int) -> QSeries:
    """
    The finite q-Pochhammer product (x; q)_n = prod_{i<n} (1 - x q^i), truncated.

    Args:
        x (Monomial): sign * q^power with sign in {+1, -1} and power >= 0
        n (int): Number of factors
        order (int): Truncation degree

    Returns:
        QSeries: The truncated product; 1 when n = 0
    """
    sign, power = x
    if sign not in (1, -1) or power < 0:
        raise PreconditionError(f"base must be +-q^s with s >= 0, got {x!r}")
    if n < 0:
        raise PreconditionError(f"number of factors must be non-negative, got {n}")
    _check_order(order)
    return _poch(sign, power, n, order)


@lru_cache(maxsize=None)
def _inverse_q_poch(n: int, order: int) -> QSeries:
    return invert_unit(_poch(1, 1, n, order))


def _triangular(n: int) -> int:
    return n * (n + 1) // 2


def gf_partitions(order: int) -> QSeries:
    """1 / (q; q)_inf truncated at q^order."""
    _check_order(order)
    return _inverse_q_poch(order, order)


def gf_overpartitions_product(order: int) -> QSeries:
    """(-q; q)_inf / (q; q)_inf truncated at q^order."""
    _check_order(order)
    return _poch(-1, 1, order, order) * _inverse_q_poch(order, order)


def gf_overpartitions_sum(order: int) -> QSeries:
    """Sum over n of (-1; q)_n q^(n(n+1)/2) / (q; q)_n^2."""
    _check_order(order)
    total = QSeries.zero(order)
    n = 0
    while _triangular(n) <= order:
        inverse = _inverse_q_poch(n, order)
        total = total + _poch(-1, 0, n, order) * QSeries.monomial(_triangular(n), order) * inverse * inverse
        n += 1
    return total


def gf_g(order: int) -> QSeries:
    """Sum over N of (-1; q)_N q^(N(N+1)/2) / (q; q)_N."""
    _check_order(order)
    total = QSeries.zero(order)
    size = 0
    while _triangular(size) <= order:
        total = total + _poch(-1, 0, size, order) * QSeries.monomial(_triangular(size), order) * _inverse_q_poch(size, order)
        size += 1
    return total


def gf_durfee_refined(N: int, order: int) -> RefinedQSeries:
    """
    Overpartitions with generalized Durfee square of size N, a marking overlined parts.

    Expands a^N q^(N(N+1)/2) (-1/a; q)_N / (q; q)_N^2, where
    a^N (-1/a; q)_N is the polynomial prod_{i<N} (a + q^i).

    Args:
        N (int): Square size
        order (int): Truncation degree in q

    Returns:
        RefinedQSeries: The bivariate expansion
    """
    if not isinstance(N, int) or N < 0:
        raise PreconditionError(f"square size must be a non-negative integer, got {N!r}")
    _check_order(order)
    prec = order + 1
    if _triangular(N) > order:
        return RefinedQSeries(_RING.zero, order)
    poly = _Q ** _triangular(N)
    for i in range(N):
        poly = rs_mul(poly, _A + _Q ** i, _Q, prec)
    inverse = _inverse_q_poch(N, order)._poly
    poly = rs_mul(rs_mul(poly, inverse, _Q, prec), inverse, _Q, prec)
    return RefinedQSeries(poly, order)


def sum_refined(order: int) -> RefinedQSeries:
    """Sum of gf_durfee_refined(N) over every N that reaches below q^(order+1)."""
    _check_order(order)
    total = RefinedQSeries(_RING.zero, order)
    size = 0
    while _triangular(size) <= order:
        total = total + gf_durfee_refined(size, order)
        size += 1
    return total


def _durfee_tuples(length: int, order: int) -> Iterator[Tuple[int, ...]]:
    """Tuples N_1 >= ... >= N_length >= 0 with N_1(N_1+1)/2 + N_2^2 + ... <= order."""

    def extend(prefix, budget):
        if len(prefix) == length:
            yield tuple(prefix)
            return
        largest = prefix[-1]
        for value in range(largest + 1):
            if value * value > budget:
                break
            yield from extend(prefix + [value], budget - value * value)

    first = 0
    while _triangular(first) <= order:
        yield from extend([first], order - _triangular(first))
        first += 1


def _arm_denominators(sizes: Tuple[int, ...], order: int) -> QSeries:
    """1 / ((q)_{N_1-N_2} ... (q)_{N_{k-2}-N_{k-1}} (q)_{N_{k-1}})."""
    product = QSeries.one(order)
    for upper, lower in zip(sizes, sizes[1:]):
        product = product * _inverse_q_poch(upper - lower, order)
    return product * _inverse_q_poch(sizes[-1], order)


def _multisum(k: int, order: int, term: Callable[[Tuple[int, ...]], Optional[QSeries]]) -> QSeries:
    total = QSeries.zero(order)
    count = 0
    for sizes in _durfee_tuples(k - 1, order):
        value = term(sizes)
        if value is not None:
            total = total + value
            count += 1
    logger.debug("multisum k=%d order=%d used %d tuples", k, order, count)
    return total


def gf_dki(k: int, i: int, order: int) -> QSeries:
    """
    Generating function of Rogers-Ramanujan-Gordon overpartitions D_{k,i}.

    Sum over N_1 >= ... >= N_{k-1} >= 0 of
    q^(N_1(N_1+1)/2 + N_2^2 + ... + N_{k-1}^2 + N_{i+1} + ... + N_{k-1})
    (-q)_{N_1-1} (1 + q^(N_i)) over the arm denominators. The all-zero tuple
    contributes 1 and N_k is read as 0.
    """
    validate_ki(k, i)
    _check_order(order)

    def term(sizes):
        if sizes[0] == 0:
            return QSeries.one(order)
        exponent = _triangular(sizes[0]) + sum(n * n for n in sizes[1:]) + sum(sizes[i:])
        if exponent > order:
            return None
        marker = sizes[i - 1] if i <= k - 1 else 0
        numerator = _poch(-1, 1, sizes[0] - 1, order) * (QSeries.one(order) + QSeries.monomial(marker, order))
        return QSeries.monomial(exponent, order) * numerator * _arm_denominators(sizes, order)

    return _multisum(k, order, term)


def gf_dkk(k: int, order: int) -> QSeries:
    """Sum over N_1 >= ... >= N_{k-1} >= 0 of q^(N_1(N_1+1)/2 + N_2^2 + ...) (-1)_{N_1} over the arm denominators."""
    validate_k(k)
    _check_order(order)

    def term(sizes):
        exponent = _triangular(sizes[0]) + sum(n * n for n in sizes[1:])
        return QSeries.monomial(exponent, order) * _poch(-1, 0, sizes[0], order) * _arm_denominators(sizes, order)

    return _multisum(k, order, term)


def gf_at_most_squares(k: int, order: int) -> QSeries:
    """
    Overpartitions with at most k-1 successive Durfee squares.

    A generalized square of size N_1 with its overline choices gives
    (-1)_{N_1} q^(N_1(N_1+1)/2); each deeper square of size N_j gives
    q^(N_j^2); the regions to the right of the squares give the arm
    denominators. Squares of size 0 stand for absent levels.
    This is term for term the multi-sum of gf_dkk.
    """
    return gf_dkk(k, order)


def series_by_name(name: str, order: int, k: Optional[int] = None, i: Optional[int] = None,
                   N: Optional[int] = None):
    """
    Look up a generating function by its command-line name.

    Returns:
        QSeries or RefinedQSeries: ``durfee-refined`` is refined, summed over
        all N when N is None
    """
    registry = {
        "partitions": lambda: gf_partitions(order),
        "overpartitions-product": lambda: gf_overpartitions_product(order),
        "overpartitions-sum": lambda: gf_overpartitions_sum(order),
        "g": lambda: gf_g(order),
        "dki": lambda: gf_dki(_required(k, "k"), _required(i, "i"), order),
        "dkk": lambda: gf_dkk(_required(k, "k"), order),
        "at-most-squares": lambda: gf_at_most_squares(_required(k, "k"), order),
        "durfee-refined": lambda: sum_refined(order) if N is None else gf_durfee_refined(N, order),
    }
    if name not in registry:
        raise PreconditionError(f"unknown series {name!r}")
    return registry[name]()


def _required(value, label):
    if value is None:
        raise PreconditionError(f"--{label} is required for this series")
    return value
