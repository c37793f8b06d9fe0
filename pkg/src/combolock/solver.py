"""Closed-form solver for the minimal number of adjacent-dial rotations.

The rotation distance between two combinations depends only on the pointwise
difference profile f = (unlocked - locked) mod N and, in fact, only on the
jumps of f (its forward difference, zero-extended at both ends). The optimum
is

    sum of upward jumps
    - sum over greedily paired jumps of (|up| + |down| - N)

where the k-th largest upward jump is paired with the k-th largest downward
jump for as long as their magnitudes add up to at least N. Each such pair
trades a full-turn wraparound against two large opposite jumps.

An optimal plan falls out of the same data: subtract N from every paired
upward jump and add N to every paired downward jump, which lifts f to an
integer profile g congruent to f mod N whose plain (non-modular) minimal
indicator representation has exactly the optimal cost.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from combolock.core import Combination, RotationPlan
from combolock.variation import forward_difference, minimal_representation

# Profiles at least this long are processed with numpy; shorter ones stay in
# plain Python, which is faster per call and keeps hot loops (exhaustive
# sweeps, Monte Carlo trials) cheap.
_ARRAY_MIN_N = 512


@dataclass(frozen=True)
class DiffProfile:
    """Difference profile (unlocked - locked) mod N plus its jump sequence.

    `values[i]` is in [0, N-1]; `delta` has length n+1 and holds the forward
    differences of the zero-extended profile, each in [-(N-1), N-1].
    """

    values: tuple[int, ...]
    modulus: int
    delta: tuple[int, ...]

    @classmethod
    def from_values(cls, values: Sequence[int], modulus: int) -> "DiffProfile":
        """Build a profile from raw difference digits, validating ranges."""
        if modulus < 1:
            raise ValueError(f"modulus must be a positive integer, got {modulus}")
        vals = tuple(values)
        if not vals:
            raise ValueError("profile needs at least one dial")
        if min(vals) < 0 or max(vals) >= modulus:
            raise ValueError(f"difference digits must lie in [0, {modulus - 1}]")
        return cls(vals, modulus, forward_difference(vals))

    @property
    def n(self) -> int:
        return len(self.values)


@dataclass(frozen=True)
class JumpSets:
    """Jump positions split by sign, the signed ones ordered by size.

    `plus` and `minus` hold positions i in [0, n] with delta(i) > 0 resp.
    < 0, sorted by |delta| nonincreasing with ties broken by ascending
    position; the parallel magnitude tuples repeat |delta| in that order.
    `zero` holds the remaining positions, ascending.
    """

    plus: tuple[int, ...]
    minus: tuple[int, ...]
    zero: tuple[int, ...]
    plus_magnitudes: tuple[int, ...]
    minus_magnitudes: tuple[int, ...]


@dataclass(frozen=True)
class Pairing:
    """Greedy matching of the largest upward with the largest downward jumps.

    Pair k joins the k-th largest upward jump position with the k-th largest
    downward one, for as long as the magnitudes sum to at least the modulus;
    `gains[k]` is that (nonnegative) surplus |up| + |down| - N. Pairs use
    pairwise distinct positions by construction.
    """

    pairs: tuple[tuple[int, int], ...]
    gains: tuple[int, ...]

    @property
    def count(self) -> int:
        """Number of pairs (the K in the optimal-value formula)."""
        return len(self.pairs)

    @property
    def total_gain(self) -> int:
        return sum(self.gains)


@dataclass(frozen=True)
class LiftedFunction:
    """Integer profile congruent to the difference profile mod N.

    `values[i] = f(i) + N * wraps[i]`, where `wraps[i]` counts whole turns
    added to dial i. The plain indicator-representation cost of `values`
    equals the modular optimum.
    """

    values: tuple[int, ...]
    wraps: tuple[int, ...]


def diff_profile(locked: Combination, unlocked: Combination) -> DiffProfile:
    """Pointwise (unlocked - locked) mod N profile of an instance."""
    if locked.n != unlocked.n:
        raise ValueError(f"dial counts differ: {locked.n} vs {unlocked.n}")
    if locked.modulus != unlocked.modulus:
        raise ValueError(f"moduli differ: {locked.modulus} vs {unlocked.modulus}")
    modulus = locked.modulus
    values = tuple(
        (u - l) % modulus for u, l in zip(unlocked.digits, locked.digits)
    )
    return DiffProfile(values, modulus, forward_difference(values))


def jump_sets(profile: DiffProfile) -> JumpSets:
    """Split jump positions of a profile by sign and order them by size."""
    delta = profile.delta
    plus = sorted((i for i, d in enumerate(delta) if d > 0), key=lambda i: (-delta[i], i))
    minus = sorted((i for i, d in enumerate(delta) if d < 0), key=lambda i: (delta[i], i))
    zero = tuple(i for i, d in enumerate(delta) if d == 0)
    return JumpSets(
        plus=tuple(plus),
        minus=tuple(minus),
        zero=zero,
        plus_magnitudes=tuple(delta[i] for i in plus),
        minus_magnitudes=tuple(-delta[i] for i in minus),
    )


def gain(delta_plus: int, delta_minus: int, modulus: int) -> int:
    """Objective change from wrapping one jump down and another up by a turn.

    Arguments are the signed jump values at the two chosen positions. The
    result is positive only when an upward and a downward jump have
    magnitudes summing to more than the modulus, in which case it equals
    2 * (|up| + |down| - N).
    """
    return abs(delta_plus) + abs(delta_minus) - (
        abs(delta_plus - modulus) + abs(delta_minus + modulus)
    )


def make_pairing(jumps: JumpSets, modulus: int) -> Pairing:
    """Pair the largest opposite jumps while each pair's gain stays >= 0.

    Zero-gain pairs are included; they change the recovered plan but not its
    cost, and keeping them makes the pairing count maximal.
    """
    pairs = []
    gains = []
    for up, down, up_mag, down_mag in zip(
        jumps.plus, jumps.minus, jumps.plus_magnitudes, jumps.minus_magnitudes
    ):
        surplus = up_mag + down_mag - modulus
        if surplus < 0:
            break
        pairs.append((up, down))
        gains.append(surplus)
    return Pairing(tuple(pairs), tuple(gains))


def optimal_value(profile: DiffProfile) -> int:
    """Minimal number of rotations that zero out a difference profile."""
    modulus = profile.modulus
    delta = profile.delta
    if len(delta) >= _ARRAY_MIN_N:
        d = np.asarray(delta, dtype=np.int64)
        plus = np.sort(d[d > 0])[::-1]
        minus = np.sort(-d[d < 0])[::-1]
        k = min(plus.size, minus.size)
        surplus = plus[:k] + minus[:k] - modulus
        return int(plus.sum()) - int(surplus[surplus >= 0].sum())
    plus = sorted((d for d in delta if d > 0), reverse=True)
    minus = sorted((-d for d in delta if d < 0), reverse=True)
    total = sum(plus)
    for up_mag, down_mag in zip(plus, minus):
        surplus = up_mag + down_mag - modulus
        if surplus < 0:
            break
        total -= surplus
    return total


def build_lift(profile: DiffProfile, pairing: Pairing) -> LiftedFunction:
    """Lift the profile by whole turns so paired jumps shrink below N.

    Every paired upward-jump position gets a -1 jump adjustment and every
    paired downward-jump position a +1; dial i accumulates the adjustments
    at positions 0..i-1 as its wrap count. The adjustments sum to zero, so
    the lift is a genuine profile change (nothing leaks past dial n).
    """
    n = profile.n
    modulus = profile.modulus
    steps = [0] * (n + 1)
    for up, down in pairing.pairs:
        steps[up] -= 1
        steps[down] += 1
    wraps = []
    running = 0
    for i in range(n):
        running += steps[i]
        wraps.append(running)
    values = tuple(v + modulus * w for v, w in zip(profile.values, wraps))
    return LiftedFunction(values, tuple(wraps))


def solve(locked: Combination, unlocked: Combination) -> RotationPlan:
    """Optimal rotation plan turning `locked` into `unlocked`.

    The plan's cost always equals ``optimal_value(diff_profile(locked,
    unlocked))``, and applying it to `locked` yields `unlocked` exactly.
    Ties in the jump ordering are broken by ascending position, so the
    returned plan is deterministic.
    """
    if locked.n != unlocked.n:
        raise ValueError(f"dial counts differ: {locked.n} vs {unlocked.n}")
    if locked.modulus != unlocked.modulus:
        raise ValueError(f"moduli differ: {locked.modulus} vs {unlocked.modulus}")
    modulus = locked.modulus
    n = locked.n
    fdiff = (
        np.asarray(unlocked.digits, dtype=np.int64)
        - np.asarray(locked.digits, dtype=np.int64)
    ) % modulus
    if not fdiff.any():
        return RotationPlan(())
    delta = np.empty(n + 1, dtype=np.int64)
    delta[0] = fdiff[0]
    np.subtract(fdiff[1:], fdiff[:-1], out=delta[1:n])
    delta[n] = -fdiff[n - 1]
    plus_pos = np.flatnonzero(delta > 0)
    minus_pos = np.flatnonzero(delta < 0)
    # lexsort: last key is primary, so order by descending magnitude with
    # ascending position as the tie-break (the canonical jump order).
    plus_pos = plus_pos[np.lexsort((plus_pos, -delta[plus_pos]))]
    minus_pos = minus_pos[np.lexsort((minus_pos, delta[minus_pos]))]
    cap = min(plus_pos.size, minus_pos.size)
    surplus = delta[plus_pos[:cap]] - delta[minus_pos[:cap]] - modulus
    paired = int(np.count_nonzero(surplus >= 0))  # surplus is nonincreasing
    steps = np.zeros(n + 1, dtype=np.int64)
    steps[plus_pos[:paired]] = -1
    steps[minus_pos[:paired]] = 1
    lifted = fdiff + modulus * np.cumsum(steps)[:n]
    return minimal_representation(lifted)


def _optimal_values_matrix(profiles: np.ndarray, modulus: int) -> np.ndarray:
    """Row-wise optimal values for an (m, n) matrix of difference profiles.

    Vectorized form of ``optimal_value`` used by batch estimators. Sorting
    the positive and negative jump parts padded with zeros is safe: a padded
    zero can never form a pair, since 0 + (N-1) - N < 0.
    """
    m, n = profiles.shape
    delta = np.empty((m, n + 1), dtype=np.int64)
    delta[:, 0] = profiles[:, 0]
    np.subtract(profiles[:, 1:], profiles[:, :-1], out=delta[:, 1:n])
    delta[:, n] = -profiles[:, n - 1]
    plus = np.where(delta > 0, delta, 0)
    minus = np.where(delta < 0, -delta, 0)
    plus.sort(axis=1)
    minus.sort(axis=1)
    plus = plus[:, ::-1]
    minus = minus[:, ::-1]
    surplus = plus + minus - modulus
    np.clip(surplus, 0, None, out=surplus)
    return plus.sum(axis=1) - surplus.sum(axis=1)
