import itertools
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from uavcircle import cmec
from uavcircle.cmec import (
    TooFewPointsError,
    WeightedPoint,
    constrained_mec,
    exhaustive_oracle,
    sort_by_weight,
)
from uavcircle.geom import Point2, Tolerance, circle_from_two, contains
from uavcircle.mec import mec_bruteforce, mec_welzl

from conftest import random_weighted

TOL = Tolerance()


def wps(*items):
    return [WeightedPoint(Point2(x, y), w) for x, y, w in items]


def enumerate_best_weight(points, n):
    """Plain enumeration of the best achievable weight with at most n points."""
    best = 0.0
    for size in range(1, min(n, len(points)) + 1):
        for sub in itertools.combinations(points, size):
            best = max(best, math.fsum(p.weight for p in sub))
    return best


class TestSortByWeight:
    def test_basic(self):
        assert sort_by_weight(wps((0, 0, 3), (0, 0, 1), (0, 0, 2))) == [0, 2, 1]

    def test_stable(self):
        assert sort_by_weight(wps((0, 0, 5), (1, 0, 5), (2, 0, 5))) == [0, 1, 2]

    def test_empty(self):
        assert sort_by_weight([]) == []


def test_weight_validation():
    with pytest.raises(ValueError):
        WeightedPoint(Point2(0, 0), -1.0)
    with pytest.raises(ValueError):
        WeightedPoint(Point2(0, 0), float("inf"))


class TestConstrained:
    def test_example(self):
        pts = wps((0, 0, 5), (1, 0, 4), (0.5, 0.2, 3), (50, 50, 2))
        r = constrained_mec(pts, 3)
        assert r.selected == (0, 1, 2)
        assert r.weight_sum == 12
        # diameter circle of the heaviest pair already covers the third point
        ref = mec_bruteforce([p.point for p in pts[:3]]).circle
        assert r.circle.radius == pytest.approx(ref.radius)
        assert enumerate_best_weight(pts, 3) == 12

    def test_two_points(self):
        pts = wps((0, 0, 1.5), (3, 4, 2.5))
        for n in (2, 3, 10):
            r = constrained_mec(pts, n)
            assert r.circle == circle_from_two((3, 4), (0, 0))
            assert r.weight_sum == 4.0
            assert set(r.selected) == {0, 1}

    def test_too_few(self):
        with pytest.raises(TooFewPointsError):
            constrained_mec(wps((0, 0, 1)), 2)

    def test_capacity_below_two(self):
        with pytest.raises(ValueError):
            constrained_mec(wps((0, 0, 1), (1, 1, 1)), 1)

    def test_outside_point_grows_by_diameter(self):
        # (10,0) is outside the seed circle; diameter to the farthest member covers both
        pts = wps((0, 0, 3), (1, 0, 2), (10, 0, 1))
        r = constrained_mec(pts, 3)
        assert r.selected == (0, 1, 2)
        assert r.circle.center.x == pytest.approx(5) and r.circle.radius == pytest.approx(5)

    def test_outside_point_grows_by_circumcircle(self):
        pts = wps((0, 0, 3), (2, 0, 2), (1, 1.5, 1))
        r = constrained_mec(pts, 3)
        ref = mec_bruteforce([p.point for p in pts]).circle
        assert r.circle.radius == pytest.approx(ref.radius)
        assert r.circle.center.y == pytest.approx(ref.center.y)

    def test_fallback_when_no_circumcircle(self, monkeypatch):
        monkeypatch.setattr(cmec.kernels, "best_circumcircle", lambda *a: None)
        pts = wps((0, 0, 3), (2, 0, 2), (1, 1.5, 1))
        r = constrained_mec(pts, 3)
        ref = mec_welzl([p.point for p in pts], cmec.FALLBACK_SEED).circle
        assert r.circle == ref

    def test_absorb_respects_capacity(self):
        # after the diameter grow to (10,0), both light points fall inside; only one fits
        pts = wps((0, 0, 5), (1, 0, 4), (10, 0, 3), (5, 1, 0.2), (5, -1, 0.1))
        r = constrained_mec(pts, 4)
        assert r.selected == (0, 1, 2, 3)

    def test_random_against_oracle(self, rng):
        for _ in range(30):
            pts = random_weighted(rng, 8)
            g = constrained_mec(pts, 4)
            o = exhaustive_oracle(pts, 4)
            assert g.weight_sum <= o.weight_sum
            for res in (g, o):
                assert len(res.selected) <= 4
                assert all(contains(res.circle, pts[i].point, TOL) for i in res.selected)


class TestOracle:
    def test_all_equal_weights(self, rng):
        pts = [WeightedPoint(p.point, 1.0) for p in random_weighted(rng, 6)]
        r = exhaustive_oracle(pts, 6)
        assert r.selected == tuple(range(6))
        assert r.circle.radius == pytest.approx(mec_bruteforce([p.point for p in pts]).circle.radius)

    def test_pair(self):
        pts = wps((0, 0, 0.9), (4, 0, 0.3), (1, 1, 0.8), (9, 9, 0.1))
        r = exhaustive_oracle(pts, 2)
        assert r.selected == (0, 2)
        assert r.circle.radius == pytest.approx(math.sqrt(2) / 2)

    def test_radius_tiebreak(self):
        # {0,1} and {0,2} both weigh 2; the closer pair wins
        pts = wps((0, 0, 1), (10, 0, 1), (1, 0, 1))
        r = exhaustive_oracle(pts, 2)
        assert r.selected == (0, 2)

    def test_dominates_greedy(self, rng):
        for _ in range(60):
            k = int(rng.integers(2, 11))
            n = int(rng.integers(2, k + 1))
            pts = random_weighted(rng, k)
            o = exhaustive_oracle(pts, n)
            assert o.weight_sum >= constrained_mec(pts, n).weight_sum
            assert o.weight_sum == pytest.approx(enumerate_best_weight(pts, n), abs=1e-12)


weighted_lists = st.lists(
    st.tuples(st.floats(-100, 100), st.floats(-100, 100), st.floats(0, 1)),
    min_size=2, max_size=10,
)


@settings(max_examples=200)
@given(weighted_lists, st.integers(2, 12))
def test_invariants(items, n):
    pts = wps(*items)
    r = constrained_mec(pts, n)
    assert len(r.selected) <= n
    assert len(set(r.selected)) == len(r.selected)
    assert all(contains(r.circle, pts[i].point, TOL) for i in r.selected)
    assert r.weight_sum == math.fsum(pts[i].weight for i in r.selected)
    full = mec_welzl([p.point for p in pts]).circle
    assert r.circle.radius <= full.radius + TOL.eps_contain
    order = sort_by_weight(pts)
    assert order[0] in r.selected and order[1] in r.selected


@settings(max_examples=100)
@given(weighted_lists, st.integers(2, 12), st.randoms(use_true_random=False))
def test_permutation_stability(items, n, rnd):
    weights = [w for _, _, w in items]
    if len(set(weights)) != len(weights):
        return
    pts = wps(*items)
    perm = list(range(len(pts)))
    rnd.shuffle(perm)
    a = constrained_mec(pts, n)
    b = constrained_mec([pts[i] for i in perm], n)
    assert sorted(pts[i].weight for i in a.selected) == \
        sorted(pts[perm[i]].weight for i in b.selected)
