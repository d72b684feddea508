"""Planar points, circles and the exact two- and three-point circle constructions.

All containment and boundary decisions elsewhere in the package go through
:func:`contains` and :func:`on_boundary` so the tolerance policy lives here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple, Union

DEFAULT_EPS_CONTAIN = 1e-9
DEGENERATE_REL = 1e-12
MIN_SCALE = 1e-30


class CollinearError(ValueError):
    """Three points have no finite circumcircle."""


def _check_finite(name: str, value: float) -> float:
    value = float(value)
    if not math.isfinite(value):
        raise ValueError(f"{name} must be finite, got {value!r}")
    return value


@dataclass(frozen=True)
class Point2:
    x: float
    y: float

    def __post_init__(self):
        object.__setattr__(self, "x", _check_finite("x", self.x))
        object.__setattr__(self, "y", _check_finite("y", self.y))

    def __iter__(self):
        yield self.x
        yield self.y


@dataclass(frozen=True)
class Circle:
    center: Point2
    radius: float

    def __post_init__(self):
        r = _check_finite("radius", self.radius)
        if r < 0:
            raise ValueError(f"radius must be >= 0, got {r!r}")
        object.__setattr__(self, "radius", r)


@dataclass(frozen=True)
class Tolerance:
    """Absolute slack for containment and the collinearity threshold.

    ``eps_degenerate=None`` selects the scale-aware default
    ``1e-12 * scale**2`` where ``scale`` is the largest absolute coordinate
    of the three points handed to :func:`circumcircle`.
    """

    eps_contain: float = DEFAULT_EPS_CONTAIN
    eps_degenerate: Optional[float] = None

    def __post_init__(self):
        c = _check_finite("eps_contain", self.eps_contain)
        if c < 0:
            raise ValueError("eps_contain must be >= 0")
        object.__setattr__(self, "eps_contain", c)
        if self.eps_degenerate is not None:
            d = _check_finite("eps_degenerate", self.eps_degenerate)
            if d <= 0:
                raise ValueError("eps_degenerate must be > 0")
            object.__setattr__(self, "eps_degenerate", d)

    @property
    def degenerate_arg(self) -> float:
        """Threshold as passed to the kernels; negative means scale-aware."""
        return -1.0 if self.eps_degenerate is None else self.eps_degenerate


DEFAULT_TOLERANCE = Tolerance()

PointLike = Union[Point2, Tuple[float, float], Sequence[float]]


def as_point(p: PointLike) -> Point2:
    if isinstance(p, Point2):
        return p
    x, y = p
    return Point2(x, y)


def degenerate_threshold(eps_degenerate: float, *coords: float) -> float:
    if eps_degenerate > 0:
        return eps_degenerate
    scale = MIN_SCALE
    for v in coords:
        a = abs(v)
        if a > scale:
            scale = a
    return DEGENERATE_REL * scale * scale


def circumcenter_xy(xi, yi, xj, yj, xh, yh, eps_degenerate=-1.0):
    """Circumcenter of three points from the pairwise-difference linear system.

    Returns ``None`` when ``|bc - ad|`` is within the collinearity threshold.
    The compiled kernels repeat this arithmetic operation for operation.
    """
    a = xi - xj
    b = yi - yj
    c = xi - xh
    d = yi - yh
    e = ((xi * xi - xj * xj) - (yj * yj - yi * yi)) / 2.0
    f = ((xi * xi - xh * xh) - (yh * yh - yi * yi)) / 2.0
    det = a * d - b * c
    thr = degenerate_threshold(eps_degenerate, xi, yi, xj, yj, xh, yh)
    if abs(det) <= thr:
        return None
    x0 = (d * e - b * f) / det
    y0 = (a * f - c * e) / det
    return x0, y0


def circle_from_two(p: PointLike, q: PointLike) -> Circle:
    p, q = as_point(p), as_point(q)
    dx = p.x - q.x
    dy = p.y - q.y
    return Circle(
        Point2((p.x + q.x) / 2.0, (p.y + q.y) / 2.0),
        math.sqrt(dx * dx + dy * dy) / 2.0,
    )


def circumcircle(p: PointLike, q: PointLike, h: PointLike,
                 tol: Tolerance = DEFAULT_TOLERANCE) -> Circle:
    """Unique circle through three points.

    Raises :class:`CollinearError` when the points are (numerically) collinear.
    """
    p, q, h = as_point(p), as_point(q), as_point(h)
    center = circumcenter_xy(p.x, p.y, q.x, q.y, h.x, h.y, tol.degenerate_arg)
    if center is None:
        raise CollinearError(f"points {tuple(p)}, {tuple(q)}, {tuple(h)} are collinear")
    x0, y0 = center
    dx = x0 - p.x
    dy = y0 - p.y
    return Circle(Point2(x0, y0), math.sqrt(dx * dx + dy * dy))


def distance(p: PointLike, q: PointLike) -> float:
    p, q = as_point(p), as_point(q)
    dx = p.x - q.x
    dy = p.y - q.y
    return math.sqrt(dx * dx + dy * dy)


def contains(c: Circle, p: PointLike, tol: Tolerance = DEFAULT_TOLERANCE) -> bool:
    return distance(p, c.center) <= c.radius + tol.eps_contain


def on_boundary(c: Circle, p: PointLike, tol: Tolerance = DEFAULT_TOLERANCE) -> bool:
    return abs(distance(p, c.center) - c.radius) <= tol.eps_contain
