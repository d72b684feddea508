import math

import numpy as np
import pytest

from uavcircle import Point2, WeightedPoint


def random_points(rng, k, lo=-100.0, hi=100.0):
    return [Point2(float(x), float(y)) for x, y in rng.uniform(lo, hi, size=(k, 2))]


def random_weighted(rng, k, lo=-100.0, hi=100.0):
    pts = random_points(rng, k, lo, hi)
    return [WeightedPoint(p, float(w)) for p, w in zip(pts, rng.uniform(0, 1, size=k))]


def dist(p, q):
    return math.hypot(p[0] - q[0], p[1] - q[1])


@pytest.fixture
def rng():
    return np.random.default_rng(20261016)


ACCEPTANCE_LINES = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
