"""Constrained smallest enclosing circles and probabilistic-LoS UAV link evaluation."""

__version__ = "0.1.0"

from ._backend import BACKEND
from .channel import (
    ChannelParams,
    LinkStats,
    LosParams,
    Waypoint3,
    distance,
    elevation_angle,
    expected_gain,
    gains,
    link_stats,
    los_probability,
    nlos_probability,
    sample_gain,
    sample_gains,
)
from .cmec import (
    ConstrainedResult,
    TooFewPointsError,
    WeightedPoint,
    constrained_mec,
    exhaustive_oracle,
    sort_by_weight,
)
from .geom import (
    Circle,
    CollinearError,
    Point2,
    Tolerance,
    circle_from_two,
    circumcircle,
    contains,
    on_boundary,
)
from .mec import EmptyInputError, MecResult, incremental_check, mec_bruteforce, mec_welzl
from .pipeline import Report, render_svg, run_pipeline
from .scenario import ParseError, Scenario, generate_scenario, load_scenario, save_scenario
