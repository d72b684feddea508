"""Probabilistic line-of-sight air-to-ground channel.

Angles are degrees end to end; gains are linear power ratios.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from .geom import Point2, PointLike, as_point


def _finite(name, value):
    value = float(value)
    if not math.isfinite(value):
        raise ValueError(f"{name} must be finite, got {value!r}")
    return value


@dataclass(frozen=True)
class Waypoint3:
    x: float
    y: float
    z: float

    def __post_init__(self):
        for name in ("x", "y", "z"):
            object.__setattr__(self, name, _finite(name, getattr(self, name)))
        if self.z <= 0:
            raise ValueError(f"altitude z must be > 0, got {self.z!r}")


@dataclass(frozen=True)
class LosParams:
    """Sigmoid LoS model constants; ``a`` is both coefficient and angle offset."""

    a: float = 9.61
    b: float = 0.16

    def __post_init__(self):
        for name in ("a", "b"):
            v = _finite(name, getattr(self, name))
            if v <= 0:
                raise ValueError(f"{name} must be > 0, got {v!r}")
            object.__setattr__(self, name, v)


@dataclass(frozen=True)
class ChannelParams:
    beta0: float = 1e-3
    alpha_los: float = 2.0
    alpha_nlos: float = 3.0
    mu: float = 0.2

    def __post_init__(self):
        for name in ("beta0", "alpha_los", "alpha_nlos", "mu"):
            v = _finite(name, getattr(self, name))
            if v <= 0:
                raise ValueError(f"{name} must be > 0, got {v!r}")
            object.__setattr__(self, name, v)
        if self.alpha_los < 1:
            raise ValueError("alpha_los must be >= 1")
        if self.alpha_nlos < self.alpha_los:
            raise ValueError("alpha_nlos must be >= alpha_los")
        if self.mu > 1:
            raise ValueError("mu must be <= 1")


@dataclass(frozen=True)
class LinkStats:
    distance: float
    elevation_deg: float
    p_los: float
    h_los: float
    h_nlos: float
    h_expected: float


def _horizontal(u: Waypoint3, s: Point2) -> float:
    dx = s.x - u.x
    dy = s.y - u.y
    return math.sqrt(dx * dx + dy * dy)


def distance(u: Waypoint3, s: PointLike) -> float:
    """Slant range from the UAV to a ground node at altitude 0."""
    s = as_point(s)
    dx = s.x - u.x
    dy = s.y - u.y
    return math.sqrt(dx * dx + dy * dy + u.z * u.z)


def elevation_angle(u: Waypoint3, s: PointLike) -> float:
    # atan2 maps zero horizontal offset to exactly 90 degrees
    return math.degrees(math.atan2(u.z, _horizontal(u, as_point(s))))


def los_probability(theta_deg: float, p: LosParams = LosParams()) -> float:
    return 1.0 / (1.0 + p.a * math.exp(-p.b * (theta_deg - p.a)))


def nlos_probability(theta_deg: float, p: LosParams = LosParams()) -> float:
    return 1.0 - los_probability(theta_deg, p)


def gains(d: float, p: ChannelParams = ChannelParams()) -> Tuple[float, float]:
    """LoS and NLoS power-law gains at slant range ``d`` meters."""
    if d <= 0:
        raise ValueError(f"distance must be > 0, got {d!r}")
    return p.beta0 * d ** (-p.alpha_los), p.mu * p.beta0 * d ** (-p.alpha_nlos)


def link_stats(u: Waypoint3, s: PointLike, lp: LosParams = LosParams(),
               cp: ChannelParams = ChannelParams()) -> LinkStats:
    s = as_point(s)
    d = distance(u, s)
    theta = elevation_angle(u, s)
    p = los_probability(theta, lp)
    h_los, h_nlos = gains(d, cp)
    return LinkStats(d, theta, p, h_los, h_nlos, p * h_los + (1.0 - p) * h_nlos)


def expected_gain(u: Waypoint3, s: PointLike, lp: LosParams = LosParams(),
                  cp: ChannelParams = ChannelParams()) -> float:
    return link_stats(u, s, lp, cp).h_expected


def sample_gain(u: Waypoint3, s: PointLike, lp: LosParams, cp: ChannelParams,
                rng: np.random.Generator) -> float:
    """One Bernoulli LoS draw; returns exactly the LoS or the NLoS gain."""
    st = link_stats(u, s, lp, cp)
    return st.h_los if rng.random() < st.p_los else st.h_nlos


def sample_gains(u: Waypoint3, s: PointLike, lp: LosParams, cp: ChannelParams,
                 rng: np.random.Generator, size: int) -> np.ndarray:
    """Vectorized :func:`sample_gain`; consumes the stream identically."""
    st = link_stats(u, s, lp, cp)
    los = rng.random(size) < st.p_los
    return np.where(los, st.h_los, st.h_nlos)


def spawn_streams(seed: int, count: int):
    """Independent generators split deterministically from one root seed."""
    return [np.random.default_rng(s) for s in np.random.SeedSequence(seed).spawn(count)]
