"""Greedy weighted coverage circle with a cardinality cap, and its exhaustive oracle."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from ._backend import kernels
from .geom import (
    DEFAULT_TOLERANCE,
    Circle,
    Point2,
    Tolerance,
    circle_from_two,
    contains,
    distance,
)
from .mec import mec_bruteforce, mec_welzl

# fixed seed for the internal MEC fallback; keeps the greedy input-order free
FALLBACK_SEED = 0


class TooFewPointsError(ValueError):
    """The greedy search needs at least two points to start from."""


@dataclass(frozen=True)
class WeightedPoint:
    point: Point2
    weight: float

    def __post_init__(self):
        w = float(self.weight)
        if not math.isfinite(w) or w < 0:
            raise ValueError(f"weight must be finite and >= 0, got {self.weight!r}")
        object.__setattr__(self, "weight", w)


@dataclass(frozen=True)
class ConstrainedResult:
    circle: Circle
    selected: Tuple[int, ...]
    weight_sum: float


def sort_by_weight(points: Sequence[WeightedPoint]) -> List[int]:
    """Indices by non-increasing weight; ties keep input order."""
    return sorted(range(len(points)), key=lambda i: -points[i].weight)


def _weight_sum(points, selected):
    # correctly rounded, so comparisons between subsets do not depend on order
    return math.fsum(points[i].weight for i in selected)


def constrained_mec(points: Sequence[WeightedPoint], n: int,
                    tol: Tolerance = DEFAULT_TOLERANCE) -> ConstrainedResult:
    """Greedy search for a small circle covering at most ``n`` heavy points.

    Points are visited once, heaviest first. The two heaviest seed the
    circle as a diameter. A visited point inside the circle joins; a point
    outside grows the circle (diameter to the farthest member, else the
    smallest covering circumcircle through it and two members, else the
    MEC of members plus the point). After each join the unvisited points
    now inside are absorbed in weight order, up to the cap.
    """
    k = len(points)
    if k < 2:
        raise TooFewPointsError(f"need at least 2 points, got {k}")
    if n < 2:
        raise ValueError(f"capacity must be >= 2, got {n}")

    order = sort_by_weight(points)
    pts = [wp.point for wp in points]
    xs = [p.x for p in pts]
    ys = [p.y for p in pts]

    selected = [order[0], order[1]]
    taken = set(selected)
    circle = circle_from_two(pts[order[0]], pts[order[1]])

    def absorb():
        for idx in order:
            if len(selected) >= n:
                return
            if idx not in taken and contains(circle, pts[idx], tol):
                selected.append(idx)
                taken.add(idx)

    for idx in order[2:]:
        if len(selected) >= n:
            break
        if idx in taken:
            continue
        p = pts[idx]
        if not contains(circle, p, tol):
            circle = _grow(pts, xs, ys, selected, idx, circle, tol)
        selected.append(idx)
        taken.add(idx)
        absorb()

    if len(selected) > n:
        selected = sorted(selected, key=order.index)[:n]
    selected = tuple(selected)
    return ConstrainedResult(circle, selected, _weight_sum(points, selected))


def _grow(pts, xs, ys, selected, idx, circle, tol):
    p = pts[idx]
    far = max(selected, key=lambda s: distance(p, pts[s]))
    cand = circle_from_two(p, pts[far])
    if all(contains(cand, pts[s], tol) for s in selected):
        return cand

    best = kernels.best_circumcircle(xs, ys, selected, idx, tol.eps_contain,
                                     tol.degenerate_arg)
    ref = mec_welzl([pts[s] for s in selected] + [p], FALLBACK_SEED, tol).circle
    if best is None or best[2] > ref.radius + tol.eps_contain:
        return ref
    return Circle(Point2(best[0], best[1]), best[2])


def exhaustive_oracle(points: Sequence[WeightedPoint], n: int,
                      tol: Tolerance = DEFAULT_TOLERANCE) -> ConstrainedResult:
    """Best subset of at most ``n`` points by weight, then MEC radius, then index order."""
    k = len(points)
    if k < 1:
        raise TooFewPointsError("need at least 1 point")
    if n < 1:
        raise ValueError(f"capacity must be >= 1, got {n}")

    best_w = -1.0
    tied = []
    for size in range(1, min(n, k) + 1):
        for subset in itertools.combinations(range(k), size):
            w = _weight_sum(points, subset)
            if w > best_w:
                best_w = w
                tied = [subset]
            elif w == best_w:
                tied.append(subset)

    best = None
    for subset in sorted(tied):
        res = mec_bruteforce([points[i].point for i in subset], tol)
        if best is None or res.circle.radius < best[0].radius:
            best = (res.circle, subset)
    circle, subset = best
    return ConstrainedResult(circle, subset, best_w)
