import pytest

from overdurfee.components.durfee import count_at_most_squares, count_by_durfee_and_overlines, count_g
from overdurfee.components.partition_core import count_overpartitions
from overdurfee.components.qseries import (
    Monomial,
    QSeries,
    RefinedQSeries,
    gf_at_most_squares,
    gf_dki,
    gf_dkk,
    gf_durfee_refined,
    gf_g,
    gf_overpartitions_product,
    gf_overpartitions_sum,
    gf_partitions,
    invert_unit,
    poch_finite,
    series_add,
    series_by_name,
    series_mul,
    series_scale,
    sum_refined,
)
from overdurfee.components.rrg import count_dki
from overdurfee.utils.errors import PreconditionError


class TestArithmetic:
    def test_truncates_to_smaller_order(self):
        s = QSeries.from_coefficients([1, 1, 1, 1])
        t = QSeries.from_coefficients([1, -1])
        assert series_mul(s, t).coefficients() == [1, 0]
        assert series_add(s, t).order == 1

    def test_scale_and_subtract(self):
        s = QSeries.from_coefficients([1, 2, 3])
        assert series_scale(s, -2).coefficients() == [-2, -4, -6]
        assert (s - s) == QSeries.zero(2)
        assert (1 + s).coefficients() == [2, 2, 3]

    def test_coefficient_range(self):
        s = QSeries.one(3)
        assert s[3] == 0
        with pytest.raises(IndexError):
            s[4]

    def test_invert_unit(self):
        geometric = invert_unit(QSeries.from_coefficients([1, -1, 0, 0, 0, 0]))
        assert geometric.coefficients() == [1] * 6
        assert invert_unit(QSeries.from_coefficients([-1, 1, 0, 0])).coefficients() == [-1] * 4

    def test_invert_non_unit(self):
        with pytest.raises(PreconditionError):
            invert_unit(QSeries.from_coefficients([2, 1]))

    def test_poch_finite(self):
        assert poch_finite(Monomial(-1, 1), 3, 10).coefficients() == [1, 1, 1, 2, 1, 1, 1, 0, 0, 0, 0]
        assert poch_finite(Monomial(1, 1), 0, 4) == QSeries.one(4)
        assert poch_finite(Monomial(-1, 0), 2, 3).coefficients() == [2, 2, 0, 0]

    def test_poch_finite_bad_base(self):
        with pytest.raises(PreconditionError):
            poch_finite(Monomial(2, 1), 3, 5)

    def test_big_coefficients_stay_exact(self):
        assert gf_overpartitions_product(100)[100] == count_overpartitions_formula_100()


def count_overpartitions_formula_100():
    # coefficient of q^100 in (-q;q)_inf/(q;q)_inf, computed as a plain convolution
    order = 100
    distinct = [1] + [0] * order
    for part in range(1, order + 1):
        for n in range(order, part - 1, -1):
            distinct[n] += distinct[n - part]
    unrestricted = [1] + [0] * order
    for part in range(1, order + 1):
        for n in range(part, order + 1):
            unrestricted[n] += unrestricted[n - part]
    return sum(distinct[m] * unrestricted[order - m] for m in range(order + 1))


class TestGeneratingFunctions:
    def test_partitions(self):
        assert gf_partitions(10).coefficients() == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]
        assert gf_partitions(0).coefficients() == [1]

    def test_overpartitions_product(self):
        assert gf_overpartitions_product(5).coefficients() == [1, 2, 4, 8, 14, 24]

    @pytest.mark.slow
    def test_product_equals_sum(self):
        assert gf_overpartitions_product(40) == gf_overpartitions_sum(40)
        series = gf_overpartitions_product(20)
        assert [series[n] for n in (20,)] == [7336]

    def test_g(self):
        series = gf_g(12)
        assert series.coefficients()[:6] == [1, 2, 2, 4, 6, 8]
        assert all(series[n] == count_g(n) for n in range(13))

    def test_dkk_examples(self):
        assert gf_dkk(2, 3).coefficients() == [1, 2, 2, 4]
        assert gf_dkk(3, 3).coefficients() == [1, 2, 4, 6]

    @pytest.mark.parametrize("k", [2, 3, 4])
    def test_dkk_matches_both_oracles(self, k):
        dkk = gf_dkk(k, 10)
        squares = gf_at_most_squares(k, 10)
        assert all(dkk[n] == count_dki(n, k, k) for n in range(11))
        assert all(squares[n] == count_at_most_squares(n, k - 1) for n in range(11))

    @pytest.mark.parametrize("k, i", [(2, 1), (2, 2), (3, 1), (3, 2), (3, 3), (4, 1), (4, 2), (4, 3), (4, 4)])
    def test_dki_matches_enumeration(self, k, i):
        series = gf_dki(k, i, 10)
        assert all(series[n] == count_dki(n, k, i) for n in range(11))

    def test_dki_small_values(self):
        assert gf_dki(2, 1, 3).coefficients() == [1, 1, 2, 3]
        assert gf_dki(2, 2, 3).coefficients() == [1, 2, 2, 4]

    @pytest.mark.parametrize("k, i", [(1, 1), (3, 0), (3, 4)])
    def test_dki_rejects_parameters(self, k, i):
        with pytest.raises(PreconditionError):
            gf_dki(k, i, 5)

    @pytest.mark.parametrize("build", [gf_dkk, gf_at_most_squares])
    def test_k_below_two_rejected(self, build):
        with pytest.raises(PreconditionError, match="k must be an integer >= 2"):
            build(1, 5)


class TestRefined:
    def test_square_of_size_two(self):
        series = gf_durfee_refined(2, 3)
        assert series.coefficient(1, 3) == 1
        assert series.coefficient(2, 3) == 1
        assert series.coefficient(0, 3) == 0

    def test_square_of_size_one(self):
        series = gf_durfee_refined(1, 3)
        assert series.coefficient(0, 3) == 3
        assert series.coefficient(1, 3) == 3

    def test_matches_brute_force_table(self):
        order = 8
        for n in range(order + 1):
            table = count_by_durfee_and_overlines(n)
            for (size, m), count in table.items():
                assert gf_durfee_refined(size, order).coefficient(m, n) == count

    def test_sum_at_a_equal_one(self):
        total = sum_refined(12)
        assert isinstance(total, RefinedQSeries)
        assert total.at_a_equals_one() == gf_overpartitions_product(12)
        assert total.max_a_degree() <= 4

    def test_beyond_order(self):
        assert gf_durfee_refined(5, 10).coefficients() == {}


class TestRegistry:
    def test_lookup(self):
        assert series_by_name("dkk", 3, k=2).coefficients() == [1, 2, 2, 4]
        assert series_by_name("partitions", 0).coefficients() == [1]
        assert isinstance(series_by_name("durfee-refined", 4), RefinedQSeries)
        assert series_by_name("durfee-refined", 4, N=1) == gf_durfee_refined(1, 4)

    def test_missing_parameter(self):
        with pytest.raises(PreconditionError, match="--k"):
            series_by_name("dki", 4, i=1)

    def test_unknown(self):
        with pytest.raises(PreconditionError):
            series_by_name("nope", 4)
