# -*- coding: utf-8 -*-
"""
Randomized response over a finite domain.

With probability ``p_honest`` a respondent answers truthfully; otherwise the
answer is drawn uniformly from the whole domain, the true value included.
For two fair coins on a yes/no question this gives a truthful answer with
probability 3/4 and epsilon = ln 3.

All sampling goes through ``numpy.random.default_rng`` seeded by the caller.
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Any, Dict, Optional, Sequence, Tuple, Union

import numpy as np

from core.errors import DomainValueError, EstimatorUndefinedError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RandomizedResponseMechanism:
    """
    Attributes:
        p_honest: Probability that the first coin mandates a truthful answer.
        domain_size: Number of possible answers.
        labels: Optional answer labels; defaults to ``0 .. domain_size - 1``.
            In the binary case the second element is the positive answer.
    """

    p_honest: float
    domain_size: int = 2
    labels: Optional[Tuple[Any, ...]] = None

    def __post_init__(self):
        if not 0 <= self.p_honest <= 1:
            raise ValueError(f"p_honest must lie in [0, 1], got {self.p_honest}")
        if self.domain_size < 2:
            raise ValueError(f"domain_size must be >= 2, got {self.domain_size}")
        if self.labels is not None:
            object.__setattr__(self, "labels", tuple(self.labels))
            if len(self.labels) != self.domain_size or len(set(self.labels)) != self.domain_size:
                raise ValueError(f"labels must list {self.domain_size} distinct answers, got {self.labels}")

    @property
    def domain(self) -> Tuple[Any, ...]:
        return self.labels if self.labels is not None else tuple(range(self.domain_size))

    @property
    def is_binary(self) -> bool:
        return self.domain_size == 2

    def index_of(self, value: Any) -> int:
        try:
            return self.domain.index(value)
        except ValueError:
            raise DomainValueError(f"Value {value!r} is outside the mechanism's domain {list(self.domain)}")

    def answer_probability(self, true_value: Any, answer: Any) -> Fraction:
        """Exact probability of reporting ``answer`` when the truth is ``true_value``."""
        p = Fraction(self.p_honest)
        noise = (1 - p) / self.domain_size
        return noise + (p if self.index_of(answer) == self.index_of(true_value) else 0)


def rr_respond(true_value: Any, mech: RandomizedResponseMechanism, rng_seed: Any = None) -> Any:
    """
    One randomized answer for ``true_value``.

    Raises:
        DomainValueError: If ``true_value`` is outside the domain.
    """
    index = mech.index_of(true_value)
    rng = np.random.default_rng(rng_seed)
    if rng.random() < mech.p_honest:
        return mech.domain[index]
    return mech.domain[int(rng.integers(mech.domain_size))]


def rr_respond_many(values: Sequence[Any], mech: RandomizedResponseMechanism, rng_seed: Any = None) -> np.ndarray:
    """
    Vectorised ``rr_respond`` over many respondents.

    Returns:
        np.ndarray: One answer per input value, drawn from a single seeded generator.
    """
    if mech.labels is None:
        indices = np.asarray(values, dtype=np.int64)
        if indices.size and (indices.min() < 0 or indices.max() >= mech.domain_size):
            raise DomainValueError(f"Values must lie in 0 .. {mech.domain_size - 1}")
    else:
        indices = np.asarray([mech.index_of(v) for v in values], dtype=np.int64)

    rng = np.random.default_rng(rng_seed)
    honest = rng.random(indices.shape) < mech.p_honest
    noise = rng.integers(0, mech.domain_size, size=indices.shape)
    answers = np.where(honest, indices, noise)
    if mech.labels is None:
        return answers
    return np.asarray(mech.domain, dtype=object)[answers]


def simulate_survey(n: int, true_count: int, mech: RandomizedResponseMechanism, seed: Any = None) -> int:
    """
    Run a binary survey of ``n`` respondents, ``true_count`` of them truly positive.

    Returns:
        int: Number of positive answers observed.
    """
    if not mech.is_binary:
        raise ValueError("Survey simulation needs a binary mechanism")
    if not 0 <= true_count <= n:
        raise ValueError(f"true_count must lie in [0, n], got {true_count} for n={n}")
    negative, positive = mech.domain
    truth = np.zeros(n, dtype=np.int64)
    truth[:true_count] = 1
    answers = rr_respond_many(truth if mech.labels is None else np.where(truth == 1, positive, negative).tolist(),
                              mech, seed)
    observed = int(np.count_nonzero(answers == positive))
    logger.debug(f"Survey of {n} respondents ({true_count} positive) observed {observed} positive answers")
    return observed


def rr_epsilon(mech: RandomizedResponseMechanism) -> float:
    """
    Privacy loss of one answer: the largest log-ratio of answer probabilities
    across two true values, ``ln(1 + p * d / (1 - p))``. ``p_honest = 1`` gives ``inf``.
    """
    if mech.p_honest >= 1:
        return math.inf
    return math.log1p(mech.p_honest * mech.domain_size / (1 - mech.p_honest))


def p_honest_for_epsilon(epsilon: float, domain_size: int = 2) -> float:
    """Inverse of ``rr_epsilon``: ``(e^eps - 1) / (e^eps - 1 + d)``."""
    if epsilon < 0:
        raise ValueError(f"epsilon must be >= 0, got {epsilon}")
    if domain_size < 2:
        raise ValueError(f"domain_size must be >= 2, got {domain_size}")
    if math.isinf(epsilon):
        return 1.0
    grown = math.expm1(epsilon)
    return grown / (grown + domain_size)


@dataclass(frozen=True)
class CountEstimate:
    """Unbiased estimate of the true positive count, plus its value clipped to ``[0, n]``."""

    estimate: float
    clamped: float
    n: int
    observed_true: int

    def to_dict(self) -> Dict[str, Any]:
        return {"estimate": self.estimate, "clamped": self.clamped, "n": self.n, "observed_true": self.observed_true}


def rr_estimate_count(observed_true: int, n: int, mech: RandomizedResponseMechanism) -> CountEstimate:
    """
    Invert the binary mechanism: ``(x_O - n (1 - p) / 2) / p``.

    At ``p = 0.5`` this is ``2 x_O - n / 2``.

    Raises:
        EstimatorUndefinedError: If ``p_honest`` is 0.
    """
    if not mech.is_binary:
        raise ValueError("Count estimation needs a binary mechanism")
    if not 0 <= observed_true <= n:
        raise ValueError(f"observed_true must lie in [0, n], got {observed_true} for n={n}")
    p = mech.p_honest
    if p == 0:
        raise EstimatorUndefinedError("Answers carry no information when p_honest is 0")
    estimate = (observed_true - n * (1 - p) / 2) / p
    return CountEstimate(estimate, min(max(estimate, 0.0), float(n)), n, observed_true)


def output_distribution(mech: RandomizedResponseMechanism, true_value: Any, releases: int = 1) -> Dict[Tuple[Any, ...], Fraction]:
    """
    Exact distribution of the answers to ``releases`` independent runs on one secret.

    Keys are answer tuples of length ``releases``.
    """
    if releases < 1:
        raise ValueError(f"releases must be >= 1, got {releases}")
    single = {answer: mech.answer_probability(true_value, answer) for answer in mech.domain}
    distribution = {}
    for outcome in product(mech.domain, repeat=releases):
        probability = Fraction(1)
        for answer in outcome:
            probability *= single[answer]
        distribution[outcome] = probability
    return distribution


def dp_certificate(mech: RandomizedResponseMechanism, releases: int = 1) -> Union[Fraction, float]:
    """
    Largest ratio ``P(o | v) / P(o | v')`` over outcomes and pairs of true values,
    found by exhaustive enumeration. Returns ``inf`` when some outcome is impossible
    for one value but not for another.
    """
    distributions = [output_distribution(mech, v, releases) for v in mech.domain]
    worst = Fraction(1)
    for outcome in distributions[0]:
        probabilities = [d[outcome] for d in distributions]
        low, high = min(probabilities), max(probabilities)
        if low == 0:
            if high > 0:
                return math.inf
            continue
        worst = max(worst, high / low)
    return worst
