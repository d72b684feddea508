"""The compiled kernels and the Python fallback must agree bit for bit."""

import numpy as np
import pytest

from uavcircle import _backend, _pykernels

ck = pytest.importorskip("uavcircle._ckernels")


def cases(seed, count, kmax):
    rng = np.random.default_rng(seed)
    for _ in range(count):
        k = int(rng.integers(2, kmax + 1))
        xy = rng.uniform(-100, 100, size=(k, 2))
        # snap a share of instances to a coarse grid to provoke ties and collinearity
        if rng.random() < 0.3:
            xy = np.round(xy / 25) * 25
        yield [float(v) for v in xy[:, 0]], [float(v) for v in xy[:, 1]], rng


def test_backend_selected():
    assert _backend.BACKEND in ("cython", "python")


@pytest.mark.parametrize("eps_deg", [-1.0, 1e-3])
def test_welzl_parity(eps_deg):
    for xs, ys, rng in cases(1, 400, 15):
        order = [int(i) for i in rng.permutation(len(xs))]
        assert ck.welzl(xs, ys, order, 1e-9, eps_deg) == _pykernels.welzl(
            xs, ys, order, 1e-9, eps_deg)


def test_bruteforce_parity():
    for xs, ys, _ in cases(2, 300, 12):
        assert ck.bruteforce(xs, ys, 1e-9, -1.0) == _pykernels.bruteforce(xs, ys, 1e-9, -1.0)


def test_best_circumcircle_parity():
    for xs, ys, rng in cases(3, 300, 12):
        k = len(xs)
        if k < 4:
            continue
        members = [int(i) for i in rng.permutation(k)[: k - 1]]
        extra = next(i for i in range(k) if i not in members)
        assert ck.best_circumcircle(xs, ys, members, extra, 1e-9, -1.0) == \
            _pykernels.best_circumcircle(xs, ys, members, extra, 1e-9, -1.0)


def test_best_circumcircle_none_when_too_few_members():
    assert ck.best_circumcircle([0.0, 1.0], [0.0, 0.0], [0], 1, 1e-9, -1.0) is None
    assert _pykernels.best_circumcircle([0.0, 1.0], [0.0, 0.0], [0], 1, 1e-9, -1.0) is None
