import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bridgepants.farey import (
    INFINITY,
    ZERO,
    ContinuedFraction,
    FareyPath,
    Slope,
    bfs_distance_oracle,
    bounded_slopes,
    cf_expand,
    cf_value,
    farey_distance,
    farey_neighbors,
    geodesic,
    is_farey_edge,
    ladder,
    reduce,
    truncation_path,
)
from oracles import lex_least_geodesic_in_box, reduced_slopes_in_normal_range


def S(text):
    return Slope.parse(text)


def labels(path):
    return [str(v) for v in path]


class TestSlope:
    @pytest.mark.parametrize(
        "n, d, expected",
        [(4, 10, "2/5"), (-3, 0, "1/0"), (3, -11, "-3/11"), (0, 7, "0/1"), (-6, -4, "3/2")],
    )
    def test_reduce(self, n, d, expected):
        assert str(reduce(n, d)) == expected

    def test_reduce_rejects_zero_over_zero(self):
        with pytest.raises(ValueError):
            reduce(0, 0)

    @pytest.mark.parametrize("n, d", [(2, 4), (1, -3), (-1, 0), (5, 0)])
    def test_constructor_rejects_noncanonical(self, n, d):
        with pytest.raises(ValueError):
            Slope(n, d)

    def test_parse(self):
        assert S(" -4 / 6 ") == Slope(-2, 3)
        for bad in ("2", "a/b", "1/2/3", ""):
            with pytest.raises(ValueError):
                S(bad)


class TestEdges:
    @pytest.mark.parametrize(
        "u, v, expected", [("1/0", "7/1", True), ("1/2", "2/5", True), ("1/4", "2/5", False)]
    )
    def test_examples(self, u, v, expected):
        assert is_farey_edge(S(u), S(v)) is expected

    def test_symmetry_exhaustive(self):
        slopes = bounded_slopes(30)
        slopes = [s for s in slopes if abs(s.numerator) <= s.denominator or s.is_infinite]
        for i, u in enumerate(slopes):
            for v in slopes[i + 1 :: 7]:
                assert is_farey_edge(u, v) == is_farey_edge(v, u)

    @given(
        st.integers(-40, 40), st.integers(1, 30), st.integers(-40, 40), st.integers(1, 30),
        st.integers(-5, 5),
    )
    def test_negation_and_translation_preserve_edges(self, a, b, c, d, n):
        if math.gcd(a, b) != 1 or math.gcd(c, d) != 1 or (a, b) == (c, d):
            return
        u, v = Slope(a, b), Slope(c, d)
        assert is_farey_edge(u, v) == is_farey_edge(Slope(-a, b), Slope(-c, d))
        assert is_farey_edge(u, v) == is_farey_edge(reduce(a + n * b, b), reduce(c + n * d, d))

    @pytest.mark.parametrize("bound", [1, 2, 5, 9])
    def test_neighbor_enumeration_matches_pairwise_scan(self, bound):
        verts = bounded_slopes(bound)
        for s in verts:
            fast = set(farey_neighbors(s, bound))
            brute = {v for v in verts if v != s and is_farey_edge(s, v)}
            assert fast == brute, s


class TestContinuedFraction:
    @pytest.mark.parametrize(
        "slope, coeffs", [("2/5", [2, 2]), ("3/11", [3, 1, 2]), ("1/3", [3]), ("1/2", [2])]
    )
    def test_expand(self, slope, coeffs):
        assert list(cf_expand(S(slope))) == coeffs

    @pytest.mark.parametrize(
        "coeffs, value", [([2, 2], "2/5"), ([3, 1], "1/4"), ([2], "1/2"), ([3, 1, 2], "3/11")]
    )
    def test_value(self, coeffs, value):
        assert cf_value(ContinuedFraction(tuple(coeffs))) == S(value)

    @pytest.mark.parametrize("bad", ["0/1", "1/0", "3/5", "-1/3", "1/1"])
    def test_expand_domain(self, bad):
        with pytest.raises(ValueError):
            cf_expand(S(bad))

    def test_canonical_rewrites_trailing_one(self):
        cf = ContinuedFraction((3, 1))
        assert not cf.is_canonical
        assert cf.canonical().coefficients == (4,)
        assert cf_value(cf) == cf_value(cf.canonical())

    def test_invalid_coefficients(self):
        with pytest.raises(ValueError):
            ContinuedFraction(())
        with pytest.raises(ValueError):
            ContinuedFraction((2, 0))

    def test_round_trip_exhaustive(self):
        for s in reduced_slopes_in_normal_range(200):
            cf = cf_expand(s)
            assert cf.is_canonical and cf.coefficients[-1] >= 2
            assert cf.coefficients[0] >= 2
            assert cf_value(cf) == s

    @given(st.lists(st.integers(1, 9), min_size=1, max_size=8))
    def test_expand_of_value_is_canonicalization(self, coeffs):
        coeffs[0] = max(coeffs[0], 2)
        cf = ContinuedFraction(tuple(coeffs))
        assert cf_expand(cf_value(cf)) == cf.canonical()


class TestPaths:
    def test_truncation_paths(self):
        assert labels(truncation_path([2, 2])) == ["1/0", "0/1", "1/2", "2/5"]
        assert labels(truncation_path([3, 1, 2])) == ["1/0", "0/1", "1/3", "1/4", "3/11"]
        assert labels(truncation_path([3])) == ["1/0", "0/1", "1/3"]
        assert truncation_path([3, 1, 2]).length == 4

    def test_farey_path_validates(self):
        with pytest.raises(ValueError):
            FareyPath((INFINITY, S("1/2")))
        with pytest.raises(ValueError):
            FareyPath((INFINITY, ZERO, INFINITY))

    def test_ladder_of_3_11(self):
        assert labels(ladder([3, 1, 2])) == ["1/0", "0/1", "1/1", "1/2", "1/3", "1/4", "2/7", "3/11"]

    def test_paths_valid_for_all_q_up_to_200(self):
        for s in reduced_slopes_in_normal_range(200):
            cf = cf_expand(s)
            t = truncation_path(cf)
            g = geodesic(s)
            assert t.vertices[-1] == s and g.vertices[-1] == s
            assert g.vertices[0] == INFINITY
            assert g.length <= t.length

    def test_shortcut_soundness(self):
        for s in reduced_slopes_in_normal_range(120):
            coeffs = cf_expand(s).coefficients
            for j, a in enumerate(coeffs, start=1):
                if a != 1:
                    continue
                before = ZERO if j - 2 == 0 else cf_value(coeffs[: j - 2])
                assert is_farey_edge(before, cf_value(coeffs[:j]))


class TestDistance:
    @pytest.mark.parametrize("slope, d", [("2/5", 3), ("3/11", 3), ("1/0", 0), ("0/1", 1), ("1/3", 2)])
    def test_examples(self, slope, d):
        assert farey_distance(S(slope)) == d

    @pytest.mark.parametrize(
        "slope, path",
        [
            ("2/5", ["1/0", "0/1", "1/2", "2/5"]),
            ("3/11", ["1/0", "0/1", "1/4", "3/11"]),
            ("0/1", ["1/0", "0/1"]),
            ("1/0", ["1/0"]),
        ],
    )
    def test_geodesic_examples(self, slope, path):
        assert labels(geodesic(S(slope))) == path

    def test_domain(self):
        for bad in ("3/5", "-1/3", "1/1", "7/2"):
            with pytest.raises(ValueError):
                farey_distance(S(bad))
            with pytest.raises(ValueError):
                geodesic(S(bad))

    def test_certify(self):
        assert farey_distance(S("3/11"), certify=True) == 3

    def test_half_cf_length_inequality_up_to_200(self):
        for s in reduced_slopes_in_normal_range(200):
            n = len(cf_expand(s))
            d = farey_distance(s)
            assert n / 2 <= d - 1 <= n, s

    def test_distance_positive_all_ones_chain(self):
        # consecutive 1's: [2,1,1,1,2] has several overlapping shortcut options
        s = cf_value([2, 1, 1, 1, 2])
        assert farey_distance(s) == bfs_distance_oracle(INFINITY, s, 2 * s.denominator)

    def test_geodesic_tiebreak_matches_box_search(self):
        for s in reduced_slopes_in_normal_range(21):
            assert list(geodesic(s).vertices) == lex_least_geodesic_in_box(s, 2 * s.denominator), s


class TestOracle:
    def test_examples(self):
        assert bfs_distance_oracle(INFINITY, S("2/5"), 10) == 3
        assert bfs_distance_oracle(INFINITY, S("3/11"), 22) == 3
        for b in (1, 2, 7):
            assert bfs_distance_oracle(INFINITY, ZERO, b) == 1

    def test_endpoints_outside_box(self):
        with pytest.raises(ValueError):
            bfs_distance_oracle(INFINITY, S("3/11"), 10)
        with pytest.raises(ValueError):
            bfs_distance_oracle(S("5/3"), ZERO, 4)

    def test_monotone_in_bound(self):
        target = S("5/13")
        values = [bfs_distance_oracle(INFINITY, target, b) for b in range(13, 60, 4)]
        assert values == sorted(values, reverse=True)

    @settings(max_examples=40, deadline=None)
    @given(st.integers(-6, 6), st.integers(1, 6), st.integers(-6, 6), st.integers(1, 6))
    def test_negation_preserves_box_distance(self, a, b, c, d):
        if math.gcd(a, b) != 1 or math.gcd(c, d) != 1:
            return
        bound = 8
        assert bfs_distance_oracle(Slope(a, b), Slope(c, d), bound) == bfs_distance_oracle(
            Slope(-a, b), Slope(-c, d), bound
        )

    @settings(max_examples=25, deadline=None)
    @given(st.integers(0, 4), st.integers(1, 4), st.integers(-3, 3))
    def test_translation_preserves_stable_distance(self, a, b, n):
        if math.gcd(a, b) != 1 or (a, b) == (0, 1):
            return
        u, v = ZERO, Slope(a, b)
        tu, tv = reduce(n, 1), reduce(a + n * b, b)
        base = bfs_distance_oracle(u, v, 24)
        assert base == bfs_distance_oracle(u, v, 48)
        assert base == bfs_distance_oracle(tu, tv, 48)

    def test_agrees_with_ladder_search(self):
        for s in reduced_slopes_in_normal_range(30):
            assert farey_distance(s) == bfs_distance_oracle(INFINITY, s, 2 * s.denominator)
