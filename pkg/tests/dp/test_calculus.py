# -*- coding: utf-8 -*-
import math

import pytest

from dp.calculus import DpParameters, compose_parallel, compose_sequential, reid_bound


def test_bound_for_fair_coins_is_exact():
    assert reid_bound(math.log(3), 2) == 0.75


def test_bound_for_a_large_domain():
    assert reid_bound(10, 10**6) == pytest.approx(0.0216, abs=1e-3)
    assert reid_bound(10, 10**6) == pytest.approx(0.021552, abs=1e-6)


def test_bound_edges():
    assert reid_bound(0, 4) == 0.25
    assert reid_bound(math.inf, 4) == 1.0
    with pytest.raises(ValueError):
        reid_bound(1, 1)
    with pytest.raises(ValueError):
        reid_bound(-1, 2)


def test_bound_grows_with_epsilon():
    bounds = [reid_bound(eps, 100) for eps in (0, 0.5, 1, 2, 5)]
    assert bounds == sorted(bounds)


def test_sequential_composition():
    assert abs(compose_sequential([math.log(3), math.log(3)]) - 2 * math.log(3)) < 1e-12
    assert compose_sequential([]) == 0.0


def test_parallel_composition():
    assert compose_parallel([0.5, 2.0, 1.0]) == 2.0
    assert compose_parallel([]) == 0.0
    with pytest.raises(ValueError):
        compose_parallel([1.0, -0.1])


def test_parameters():
    assert DpParameters(1.0).is_pure
    assert not DpParameters(1.0, 1e-6).is_pure
    with pytest.raises(ValueError):
        DpParameters(-1.0)
    with pytest.raises(ValueError):
        DpParameters(1.0, 1.0)
