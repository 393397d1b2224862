import math

import pytest

from bridgepants.complexity import (
    OPEN,
    ComplexityReport,
    SplittingSignature,
    TorusKnot,
    UnsupportedKnotError,
    complexity_from_distance,
    distance_lower_bound,
    dual_distance_02,
    known_complexity,
    pants_distance_02,
    splitting_report,
)
from bridgepants.farey import INFINITY, bfs_distance_oracle
from bridgepants.twobridge import UNKNOT, is_torus_two_bridge, mirror, normalize

SIG02 = SplittingSignature(0, 2)


def sweep(max_q=101):
    for q in range(3, max_q + 1, 2):
        for p in range(1, q // 2 + 1):
            if math.gcd(p, q) == 1:
                yield normalize(p, q)


class TestArithmetic:
    @pytest.mark.parametrize("d, g, b, expected", [(1, 0, 2, 0), (3, 1, 1, 2), (5, 0, 3, 3)])
    def test_complexity_from_distance(self, d, g, b, expected):
        assert complexity_from_distance(d, SplittingSignature(g, b)) == expected

    def test_below_lower_bound_rejected(self):
        with pytest.raises(ValueError):
            complexity_from_distance(3, SplittingSignature(2, 3))

    @pytest.mark.parametrize("g, b, expected", [(0, 2, 1), (1, 1, 1), (2, 3, 4)])
    def test_lower_bound(self, g, b, expected):
        assert distance_lower_bound(SplittingSignature(g, b)) == expected

    @pytest.mark.parametrize("g, b", [(0, 1), (-1, 2), (1, 0)])
    def test_invalid_signatures(self, g, b):
        with pytest.raises(ValueError):
            SplittingSignature(g, b)

    def test_curve_count(self):
        assert SplittingSignature(0, 2).curves_per_decomposition == 1
        assert SplittingSignature(1, 1).curves_per_decomposition == 2


class TestTwoBridgeDistances:
    @pytest.mark.parametrize("p, q, d", [(2, 5, 3), (3, 11, 3), (1, 3, 2)])
    def test_pants_distance_examples(self, p, q, d):
        assert pants_distance_02(normalize(p, q)) == d

    def test_pants_distance_oracle_for_examples(self):
        assert bfs_distance_oracle(INFINITY, normalize(1, 3).slope, 6) == 2
        assert bfs_distance_oracle(INFINITY, normalize(3, 11).slope, 22) == 3

    def test_unknot(self):
        assert pants_distance_02(UNKNOT) == 1
        assert dual_distance_02(UNKNOT) == 1

    @pytest.mark.parametrize("p, q", [(2, 5), (1, 3), (5, 17)])
    def test_dual_distance_is_one(self, p, q):
        assert dual_distance_02(normalize(p, q)) == 1

    def test_sweep_properties(self):
        for k in sweep():
            dp = pants_distance_02(k)
            assert dp >= dual_distance_02(k)
            assert dp == pants_distance_02(mirror(k))
            bp = complexity_from_distance(dp, SIG02)
            assert bp >= 1
            assert (bp == 1) == is_torus_two_bridge(k)

    @pytest.mark.parametrize("n", [3, 5, 7, 9, 21, 101])
    def test_torus_2n_distance_two(self, n):
        k = normalize(1, n)
        assert pants_distance_02(k) == 2
        assert bfs_distance_oracle(INFINITY, k.slope, 2 * n) == 2


class TestReports:
    def test_splitting_report(self):
        r = splitting_report(normalize(3, 5))
        assert (r.level, r.D, r.D_pants, r.B, r.B_pants) == ("splitting", 1, 3, 0, 2)
        assert r == splitting_report(normalize(2, 5))

    def test_report_invariant_enforced(self):
        with pytest.raises(ValueError):
            ComplexityReport(level="splitting", D=4, D_pants=3)

    def test_known_unknot(self):
        r = known_complexity(UNKNOT)
        assert (r.B, r.B_pants) == (0, 0)

    def test_known_hyperbolic_two_bridge(self):
        r = known_complexity(normalize(2, 5))
        assert r.B == 0
        assert r.B_pants is None
        assert r.provenance["B_pants"] == OPEN
        assert r.B_pants_upper == 2

    def test_known_torus_two_bridge(self):
        for k in (normalize(1, 3), normalize(1, 11), TorusKnot(2, 7)):
            r = known_complexity(k)
            assert (r.B, r.B_pants) == (0, 1)

    def test_known_torus_general(self):
        for p, q in [(3, 4), (3, 5), (4, 7), (5, 6)]:
            r = known_complexity(TorusKnot(p, q))
            assert r.B == 2
            assert r.B_pants is None

    def test_unsupported(self):
        with pytest.raises(UnsupportedKnotError):
            known_complexity("figure eight")
        with pytest.raises(ValueError):
            TorusKnot(3, 6)
