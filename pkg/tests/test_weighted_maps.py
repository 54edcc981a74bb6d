import pytest
from hypothesis import given
from hypothesis import strategies as st

from overdurfee.components.durfee import generalized_durfee_size, num_successive_squares
from overdurfee.components.partition_core import (
    enumerate_overpartitions,
    format_overpartition,
    parse_overpartition,
    sigma,
)
from overdurfee.components.weighted_maps import (
    Thm21Pair,
    enumerate_thm21_pairs,
    fiber_report_to_json,
    fiber_reports,
    fiber_table,
    fibers,
    phi,
    phi_trace,
    thm21_forward,
    thm21_inverse,
    verify_weighted_identity,
    weight_literal,
    weighted_identity_check,
)
from overdurfee.utils.errors import PreconditionError


@st.composite
def thm21_pairs(draw):
    gamma = sorted(draw(st.sets(st.integers(1, 15), max_size=6)), reverse=True)
    delta = sorted(draw(st.sets(st.integers(0, len(gamma) - 1))) if gamma else set(), reverse=True)
    return Thm21Pair.of(gamma, delta)


class TestThm21Bijection:
    def test_worked_example(self):
        pair = Thm21Pair.of((7, 6, 5, 2, 1), (4, 3, 0))
        image = thm21_forward(pair)
        assert format_overpartition(image) == "7,6o,5o,5,5"
        assert thm21_inverse(image) == pair

    def test_empty_pair(self):
        assert format_overpartition(thm21_forward(Thm21Pair.of((), ()))) == ""

    @given(thm21_pairs())
    def test_forward_lands_in_g_set(self, pair):
        image = thm21_forward(pair)
        assert sigma(image) == pair.weight
        assert len(image.parts) == generalized_durfee_size(image)
        assert thm21_inverse(image) == pair

    def test_exhaustive_round_trip_by_weight(self):
        for n in range(11):
            g_set = [op for op in enumerate_overpartitions(n) if len(op.parts) == generalized_durfee_size(op)]
            pairs = [pair for pair in enumerate_thm21_pairs(n) if pair.weight == n]
            assert len(pairs) == len(g_set)
            assert sorted(map(format_overpartition, map(thm21_forward, pairs))) == sorted(
                map(format_overpartition, g_set)
            )
            assert all(thm21_forward(thm21_inverse(op)) == op for op in g_set)

    def test_inverse_rejects_outside_g_set(self):
        with pytest.raises(PreconditionError):
            thm21_inverse(parse_overpartition("1,1"))

    def test_pair_validation(self):
        with pytest.raises(PreconditionError):
            Thm21Pair.of((3, 3), ())
        with pytest.raises(PreconditionError):
            Thm21Pair.of((3, 2), (2,))


class TestPhi:
    @pytest.mark.parametrize("text, k, image", [
        ("1,1,1", 2, "3"),
        ("3", 2, "3"),
        ("2,1", 2, "3"),
        ("2o,1", 2, "3o"),
        ("1o,1,1", 2, "3o"),
        ("2,1o", 2, "2,1o"),
        ("1,1,1", 3, "2,1"),
    ])
    def test_examples(self, text, k, image):
        assert format_overpartition(phi(parse_overpartition(text), k)) == image

    def test_trace(self):
        trace = phi_trace(parse_overpartition("1,1,1"), 2)
        assert not trace.identity
        assert trace.first_size == 1
        assert trace.num_squares == 3
        assert trace.below.parts == (1, 1)
        assert trace.below_conjugate.parts == (2,)
        assert format_overpartition(trace.result) == "3"

    def test_identity_branch(self):
        trace = phi_trace(parse_overpartition("3o"), 2)
        assert trace.identity
        assert trace.shifted is None

    def test_bad_k(self):
        with pytest.raises(PreconditionError):
            phi(parse_overpartition("3"), 1)

    @pytest.mark.parametrize("k", [2, 3])
    def test_sweep(self, k):
        for n in range(11):
            for lam in enumerate_overpartitions(n):
                image = phi(lam, k)
                assert sigma(image) == n
                assert num_successive_squares(image) <= k - 1
                assert phi(image, k) == image


class TestFibers:
    def test_fiber_table_n3_k2(self):
        table = fiber_table(3, 2)
        assert {format_overpartition(beta): len(fiber) for beta, fiber in table.items()} == {
            "3": 3, "3o": 3, "2,1o": 1, "2o,1o": 1,
        }

    def test_single_fiber(self):
        report = fibers(parse_overpartition("3"), 2)
        assert [format_overpartition(lam) for lam in report.fiber] == ["3", "2,1", "1,1,1"]
        assert report.fiber_count == 3
        assert report.literal_weight == 4
        assert not report.agrees

    def test_fiber_reports_in_enumeration_order(self):
        reports = fiber_reports(3, 2)
        assert [format_overpartition(r.beta) for r in reports] == ["3", "3o", "2,1o", "2o,1o"]
        assert [r.fiber_count for r in reports] == [3, 3, 1, 1]

    def test_fiber_json(self):
        data = fiber_report_to_json(fibers(parse_overpartition("2o,1o"), 2))
        assert data == {
            "beta": [{"v": 2, "o": True}, {"v": 1, "o": True}],
            "fiber": [[{"v": 2, "o": True}, {"v": 1, "o": True}]],
            "literal_weight": "4",
            "fiber_count": 1,
            "agrees": False,
        }

    def test_outside_target(self):
        with pytest.raises(PreconditionError):
            fibers(parse_overpartition("1,1,1"), 2)

    def test_literal_weight(self):
        assert weight_literal(parse_overpartition("3"), 2) == 4
        # fewer than k-1 squares
        assert weight_literal(parse_overpartition("3"), 3) == 1


class TestWeightedIdentity:
    def test_generic_check(self):
        assert weighted_identity_check(8, [1, 2, 3], lambda x: x) == (8, 6, False)
        assert weighted_identity_check(6, [1, 2, 3], lambda x: x) == (6, 6, True)

    def test_n3_k2(self):
        report = verify_weighted_identity(3, 2)
        assert report.passed
        assert report.pbar == report.fiber_sum == 8
        assert len(report.beta_set) == report.dkk_count == 4
        assert sorted(report.fiber_counts.values()) == [1, 1, 3, 3]
        assert any(row["beta"] == "3" for row in report.disagreements)

    def test_zero(self):
        report = verify_weighted_identity(0, 2)
        assert report.passed
        assert report.fiber_sum == 1

    @pytest.mark.slow
    @pytest.mark.parametrize("k", [2, 3])
    def test_sweep(self, k):
        for n in range(13):
            report = verify_weighted_identity(n, k, with_literal=False)
            assert report.passed
            assert report.beta_set_matches_dkk
            assert report.lands_in_target and report.fixes_target
