# -*- coding: utf-8 -*-
"""
Epsilon calculus: DP parameters, composition and the reidentification bound.
"""

import logging
import math
from dataclasses import dataclass
from decimal import Decimal, localcontext
from typing import Iterable

logger = logging.getLogger(__name__)

BOUND_PRECISION = 40


@dataclass(frozen=True)
class DpParameters:
    """(epsilon, delta) of a release; ``delta == 0`` is pure epsilon-DP."""

    epsilon: float
    delta: float = 0.0

    def __post_init__(self):
        if math.isnan(self.epsilon) or self.epsilon < 0:
            raise ValueError(f"epsilon must be >= 0, got {self.epsilon}")
        if not 0 <= self.delta < 1:
            raise ValueError(f"delta must lie in [0, 1), got {self.delta}")

    @property
    def is_pure(self) -> bool:
        return self.delta == 0


def reid_bound(epsilon: float, n_values: int) -> float:
    """
    Upper bound on the probability of inferring a secret that takes one of
    ``n_values`` values from an epsilon-DP release: ``e^eps / (e^eps + n - 1)``.

    Evaluated in high-precision decimal arithmetic and rounded once, so
    ``reid_bound(log(3), 2)`` is exactly 0.75.
    """
    if n_values < 2:
        raise ValueError(f"n_values must be >= 2, got {n_values}")
    if math.isnan(epsilon) or epsilon < 0:
        raise ValueError(f"epsilon must be >= 0, got {epsilon}")
    if math.isinf(epsilon):
        return 1.0
    with localcontext() as ctx:
        ctx.prec = BOUND_PRECISION
        grown = Decimal(epsilon).exp()
        return float(grown / (grown + Decimal(n_values - 1)))


def _check_epsilons(epsilons: Iterable[float]) -> list:
    values = list(epsilons)
    for eps in values:
        if math.isnan(eps) or eps < 0:
            raise ValueError(f"epsilon values must be >= 0, got {eps}")
    return values


def compose_sequential(epsilons: Iterable[float]) -> float:
    """Total epsilon of releases on the same data: the sum."""
    return math.fsum(_check_epsilons(epsilons))


def compose_parallel(epsilons: Iterable[float]) -> float:
    """Total epsilon of releases on disjoint data: the maximum (0 when empty)."""
    return max(_check_epsilons(epsilons), default=0.0)
