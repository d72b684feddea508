"""Minimum enclosing circle: randomized incremental solver and brute-force oracle."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Tuple

import numpy as np

from ._backend import kernels
from .geom import (
    DEFAULT_TOLERANCE,
    Circle,
    Point2,
    PointLike,
    Tolerance,
    as_point,
    circle_from_two,
    circumcircle,
    contains,
    on_boundary,
)

SEED_MAX = 2**64 - 1


class EmptyInputError(ValueError):
    """No points were given."""


@dataclass(frozen=True)
class MecResult:
    circle: Circle
    support: Tuple[int, ...]


def check_seed(seed: int) -> int:
    if isinstance(seed, bool) or not isinstance(seed, (int, np.integer)):
        raise TypeError(f"seed must be an integer, got {type(seed).__name__}")
    seed = int(seed)
    if not 0 <= seed <= SEED_MAX:
        raise ValueError(f"seed must fit in 64 unsigned bits, got {seed}")
    return seed


def _coords(points: Sequence[PointLike]):
    pts = [as_point(p) for p in points]
    if not pts:
        raise EmptyInputError("cannot enclose an empty point set")
    return pts, [p.x for p in pts], [p.y for p in pts]


def _pad_support(pts, support):
    # a lone support point means every input coincides with it; pair it up
    if len(support) == 1 and len(pts) > 1:
        other = 1 if support[0] == 0 else 0
        return (support[0], other)
    return support


def shuffle_order(k: int, seed: int) -> list:
    rng = np.random.default_rng(check_seed(seed))
    return [int(i) for i in rng.permutation(k)]


def mec_welzl(points: Sequence[PointLike], seed: int = 0,
              tol: Tolerance = DEFAULT_TOLERANCE) -> MecResult:
    """Smallest circle containing every point, by randomized incremental construction.

    The visiting order is a permutation drawn from ``seed``, so the result
    depends only on the input order and the seed.
    """
    pts, xs, ys = _coords(points)
    if len(pts) == 1:
        return MecResult(Circle(pts[0], 0.0), (0,))
    order = shuffle_order(len(pts), seed)
    cx, cy, r, sup = kernels.welzl(xs, ys, order, tol.eps_contain, tol.degenerate_arg)
    sup = _pad_support(pts, tuple(sorted(sup)))
    return MecResult(Circle(Point2(cx, cy), r), sup)


def mec_bruteforce(points: Sequence[PointLike],
                   tol: Tolerance = DEFAULT_TOLERANCE) -> MecResult:
    """Exhaustive enumeration of pair and triple circles; O(k^4) reference."""
    pts, xs, ys = _coords(points)
    if len(pts) == 1:
        return MecResult(Circle(pts[0], 0.0), (0,))
    res = kernels.bruteforce(xs, ys, tol.eps_contain, tol.degenerate_arg)
    if res is None:
        raise RuntimeError("no candidate circle covers the input")
    cx, cy, r, sup = res
    return MecResult(Circle(Point2(cx, cy), r), tuple(sup))


def circle_from_support(points: Sequence[PointLike], support: Sequence[int],
                        tol: Tolerance = DEFAULT_TOLERANCE) -> Circle:
    pts = [as_point(points[i]) for i in support]
    if len(pts) == 1:
        return Circle(pts[0], 0.0)
    if len(pts) == 2:
        return circle_from_two(pts[0], pts[1])
    return circumcircle(pts[0], pts[1], pts[2], tol)


def incremental_check(points: Sequence[PointLike], extra: PointLike, seed: int = 0,
                      tol: Tolerance = DEFAULT_TOLERANCE) -> bool:
    """A point outside the MEC of ``points`` must lie on the MEC of the union."""
    extra = as_point(extra)
    before = mec_welzl(points, seed, tol).circle
    if contains(before, extra, tol):
        return True
    after = mec_welzl(list(points) + [extra], seed, tol).circle
    return on_boundary(after, extra, tol)
