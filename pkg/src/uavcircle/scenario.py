"""Scenario files: JSON parsing with field-level errors, serialization, generation."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, List, Tuple

import numpy as np

from .channel import ChannelParams, LosParams
from .cmec import WeightedPoint
from .geom import Point2, Tolerance
from .mec import check_seed

DEFAULT_ALTITUDE = 100.0


class ParseError(ValueError):
    """Malformed or invalid scenario file. ``where`` names the line or field."""

    def __init__(self, message: str, where: str = ""):
        self.where = where
        super().__init__(f"{where}: {message}" if where else message)


@dataclass(frozen=True)
class Scenario:
    nodes: Tuple[WeightedPoint, ...]
    capacity: int
    altitude: float = DEFAULT_ALTITUDE
    los: LosParams = field(default_factory=LosParams)
    channel: ChannelParams = field(default_factory=ChannelParams)
    seed: int = 0
    tolerance: Tolerance = field(default_factory=Tolerance)

    def __post_init__(self):
        object.__setattr__(self, "nodes", tuple(self.nodes))
        if len(self.nodes) < 2:
            raise ValueError(f"a scenario needs at least 2 nodes, got {len(self.nodes)}")
        if isinstance(self.capacity, bool) or not isinstance(self.capacity, int):
            raise ValueError("capacity must be an integer")
        if self.capacity < 2:
            raise ValueError(f"capacity must be >= 2, got {self.capacity}")
        alt = float(self.altitude)
        if not math.isfinite(alt) or alt <= 0:
            raise ValueError(f"altitude must be finite and > 0, got {self.altitude!r}")
        object.__setattr__(self, "altitude", alt)
        object.__setattr__(self, "seed", check_seed(self.seed))


# ---------------------------------------------------------------- parsing

_TOP_KEYS = {"nodes", "capacity", "altitude", "los", "channel", "seed", "tolerance"}


def _reject_constant(name):
    raise ParseError(f"non-finite number {name} is not allowed")


def _finite_float(text):
    v = float(text)
    if not math.isfinite(v):
        raise ParseError(f"number {text} overflows to a non-finite value")
    return v


def _number(obj, key, where):
    if key not in obj:
        raise ParseError("missing required field", f"{where}.{key}" if where else key)
    v = obj[key]
    if isinstance(v, bool) or not isinstance(v, (int, float)):
        raise ParseError(f"expected a number, got {type(v).__name__}",
                         f"{where}.{key}" if where else key)
    return float(v)


def _integer(obj, key):
    v = obj[key]
    if isinstance(v, bool) or not isinstance(v, int):
        raise ParseError(f"expected an integer, got {v!r}", key)
    return v


def _object(obj, key, allowed):
    v = obj[key]
    if not isinstance(v, dict):
        raise ParseError("expected an object", key)
    extra = sorted(set(v) - set(allowed))
    if extra:
        raise ParseError(f"unknown field {extra[0]!r}", key)
    return v


def _build(where, factory, *args, **kwargs):
    try:
        return factory(*args, **kwargs)
    except ValueError as exc:
        raise ParseError(str(exc), where) from None


def scenario_from_dict(doc: Any) -> Scenario:
    if not isinstance(doc, dict):
        raise ParseError("top level must be a JSON object")
    extra = sorted(set(doc) - _TOP_KEYS)
    if extra:
        raise ParseError(f"unknown field {extra[0]!r}")

    raw_nodes = doc.get("nodes")
    if not isinstance(raw_nodes, list):
        raise ParseError("expected a list of nodes", "nodes")
    if len(raw_nodes) < 2:
        raise ParseError(f"need at least 2 nodes, got {len(raw_nodes)}", "nodes")
    nodes: List[WeightedPoint] = []
    for i, raw in enumerate(raw_nodes):
        where = f"nodes[{i}]"
        if not isinstance(raw, dict):
            raise ParseError("expected an object", where)
        bad = sorted(set(raw) - {"x", "y", "w"})
        if bad:
            raise ParseError(f"unknown field {bad[0]!r}", where)
        x, y, w = (_number(raw, k, where) for k in ("x", "y", "w"))
        if w < 0:
            raise ParseError(f"weight must be >= 0, got {w!r}", f"{where}.w")
        nodes.append(WeightedPoint(Point2(x, y), w))

    if "capacity" not in doc:
        raise ParseError("missing required field", "capacity")
    capacity = _integer(doc, "capacity")
    if capacity < 2:
        raise ParseError(f"must be >= 2, got {capacity}", "capacity")

    altitude = _number(doc, "altitude", "") if "altitude" in doc else DEFAULT_ALTITUDE
    if altitude <= 0:
        raise ParseError(f"must be > 0, got {altitude!r}", "altitude")

    los = LosParams()
    if "los" in doc:
        raw = _object(doc, "los", ("a", "b"))
        los = _build("los", LosParams, **{k: _number(raw, k, "los") for k in raw})

    channel = ChannelParams()
    if "channel" in doc:
        raw = _object(doc, "channel", ("beta0", "alpha_los", "alpha_nlos", "mu"))
        channel = _build("channel", ChannelParams,
                         **{k: _number(raw, k, "channel") for k in raw})

    seed = 0
    if "seed" in doc:
        seed = _integer(doc, "seed")
        if not 0 <= seed < 2**64:
            raise ParseError(f"must fit in 64 unsigned bits, got {seed}", "seed")

    tolerance = Tolerance()
    if "tolerance" in doc:
        raw = _object(doc, "tolerance", ("eps_contain", "eps_degenerate"))
        tolerance = _build("tolerance", Tolerance,
                           **{k: _number(raw, k, "tolerance") for k in raw})

    return _build("", Scenario, tuple(nodes), capacity, altitude, los, channel,
                  seed, tolerance)


def parse_scenario(text: str) -> Scenario:
    try:
        doc = json.loads(text, parse_constant=_reject_constant,
                         parse_float=_finite_float)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, f"line {exc.lineno} column {exc.colno}") from None
    return scenario_from_dict(doc)


def load_scenario(path) -> Scenario:
    """Read and validate a scenario file; OSError propagates for unreadable paths."""
    return parse_scenario(Path(path).read_text(encoding="utf-8"))


# ---------------------------------------------------------------- writing

def scenario_to_dict(s: Scenario) -> dict:
    tol = {"eps_contain": s.tolerance.eps_contain}
    if s.tolerance.eps_degenerate is not None:
        tol["eps_degenerate"] = s.tolerance.eps_degenerate
    return {
        "nodes": [{"x": n.point.x, "y": n.point.y, "w": n.weight} for n in s.nodes],
        "capacity": s.capacity,
        "altitude": s.altitude,
        "los": {"a": s.los.a, "b": s.los.b},
        "channel": {
            "beta0": s.channel.beta0,
            "alpha_los": s.channel.alpha_los,
            "alpha_nlos": s.channel.alpha_nlos,
            "mu": s.channel.mu,
        },
        "seed": s.seed,
        "tolerance": tol,
    }


def dumps(doc: dict) -> str:
    # float repr is the shortest round-trip form
    return json.dumps(doc, indent=2, allow_nan=False) + "\n"


def save_scenario(s: Scenario, path) -> None:
    Path(path).write_text(dumps(scenario_to_dict(s)), encoding="utf-8")


def generate_scenario(count: int, capacity: int, extent: float, seed: int,
                      altitude: float = DEFAULT_ALTITUDE) -> Scenario:
    """``count`` nodes uniform in ``[0, extent]^2`` with weights uniform in ``[0, 1]``."""
    if count < 2:
        raise ValueError(f"count must be >= 2, got {count}")
    if not (math.isfinite(extent) and extent > 0):
        raise ValueError(f"extent must be finite and > 0, got {extent!r}")
    rng = np.random.default_rng(check_seed(seed))
    xy = rng.uniform(0.0, extent, size=(count, 2))
    w = rng.uniform(0.0, 1.0, size=count)
    nodes = tuple(
        WeightedPoint(Point2(float(x), float(y)), float(wi))
        for (x, y), wi in zip(xy, w)
    )
    return Scenario(nodes, capacity, altitude, seed=seed)
