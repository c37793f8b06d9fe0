"""Monte Carlo study of the minimal rotation count for random profiles.

For dials drawn independently and uniformly from [0, N-1], the expected
minimal rotation count empirically behaves like N * (n + 1) / 8. The
estimator reports the observed mean next to that prediction; it never
asserts the approximate law.

Reproducibility: trial t draws from ``numpy.random.default_rng(seed ^ t)``
(PCG64). Streams depend only on (seed, trial index), so any parallel or
reordered execution schedule produces the identical report.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

from combolock.solver import DiffProfile, _optimal_values_matrix

# Exact enumeration replaces sampling when the state space is this small.
EXHAUSTIVE_LIMIT = 10**6

_CHUNK_ROWS = 65536


@dataclass(frozen=True)
class TrialReport:
    """Observed mean rotation count for random profiles, with context."""

    n: int
    modulus: int
    trials: int
    mean: float
    std_error: float
    predicted: float
    seed: int
    mode: str  # "sampled" | "exhaustive"

    def to_json(self) -> str:
        """Single JSON object with fixed key order (byte-stable output)."""
        return json.dumps(
            {
                "n": self.n,
                "modulus": self.modulus,
                "trials": self.trials,
                "mean": self.mean,
                "std_error": self.std_error,
                "predicted": self.predicted,
                "seed": self.seed,
                "mode": self.mode,
            }
        )


def random_diff(n: int, modulus: int, rng: np.random.Generator) -> DiffProfile:
    """Uniform random difference profile drawn from the given generator."""
    if n < 1 or modulus < 1:
        raise ValueError("need n >= 1 and modulus >= 1")
    values = tuple(int(v) for v in rng.integers(0, modulus, size=n))
    return DiffProfile.from_values(values, modulus)


def _trial_rng(seed: int, index: int) -> np.random.Generator:
    return np.random.default_rng(seed ^ index)


def predicted_mean(n: int, modulus: int) -> float:
    """Empirical-law prediction N * (n + 1) / 8 for the expected optimum."""
    return modulus * (n + 1) / 8


def estimate_mean(n: int, modulus: int, trials: int, seed: int = 0) -> TrialReport:
    """Mean optimal rotation count over random profiles.

    Runs `trials` independent draws, or switches to exact enumeration of all
    modulus**n profiles when that is no larger than ``EXHAUSTIVE_LIMIT``
    (the report's `trials` then reflects the enumeration count and the
    standard error is zero). Sums are accumulated in exact integer
    arithmetic, so the mean does not depend on accumulation order.
    """
    if n < 1 or modulus < 1:
        raise ValueError("need n >= 1 and modulus >= 1")
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    if seed < 0:
        raise ValueError(f"seed must be nonnegative, got {seed}")

    states = modulus**n
    if states <= EXHAUSTIVE_LIMIT:
        total = 0
        for lo in range(0, states, _CHUNK_ROWS):
            hi = min(lo + _CHUNK_ROWS, states)
            idx = np.arange(lo, hi, dtype=np.int64)
            rows = np.empty((hi - lo, n), dtype=np.int64)
            for i in range(n):
                rows[:, i] = (idx // modulus**i) % modulus
            total += int(_optimal_values_matrix(rows, modulus).sum())
        return TrialReport(
            n=n,
            modulus=modulus,
            trials=states,
            mean=total / states,
            std_error=0.0,
            predicted=predicted_mean(n, modulus),
            seed=seed,
            mode="exhaustive",
        )

    rows = np.empty((trials, n), dtype=np.int64)
    for t in range(trials):
        rows[t] = random_diff(n, modulus, _trial_rng(seed, t)).values
    values = _optimal_values_matrix(rows, modulus).tolist()
    total = sum(values)
    if trials > 1:
        square_sum = sum(v * v for v in values)
        variance = (square_sum - total * total / trials) / (trials - 1)
        std_error = math.sqrt(max(variance, 0.0) / trials)
    else:
        std_error = 0.0
    return TrialReport(
        n=n,
        modulus=modulus,
        trials=trials,
        mean=total / trials,
        std_error=std_error,
        predicted=predicted_mean(n, modulus),
        seed=seed,
        mode="sampled",
    )
