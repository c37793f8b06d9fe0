"""Indicator-sum cost of integer profiles and superlevel decompositions.

A length-n integer sequence f is read as a function on dial positions 1..n,
implicitly extended by f(0) = f(n+1) = 0. Its cost is the least total
multiplicity sum(|c_j|) over exact representations

    f = sum_j c_j * indicator([a_j, b_j])        (no modular arithmetic),

which works out to half the total absolute jump sum of f. The witnessing
representation decomposes the superlevel sets {f >= level} of the positive
and negative parts into maximal intervals and merges intervals that repeat
across consecutive levels.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from combolock.core import RotationPlan

# Arrays at least this long route the block sweep through the optional
# numba kernel; below it the plain-Python sweep wins on dispatch overhead.
_JIT_MIN_SIZE = 4096

_jit_blocks = None
_jit_unavailable = False


@dataclass(frozen=True)
class LevelDecomposition:
    """Maximal intervals of {f >= level}, for level = 1 .. max(f).

    `levels[k]` holds the disjoint, left-to-right ordered intervals (a, b)
    of the superlevel set at level k+1. The zero function decomposes into
    no levels at all.
    """

    levels: tuple[tuple[tuple[int, int], ...], ...]

    @property
    def level_counts(self) -> tuple[int, ...]:
        """Number of maximal intervals at each level."""
        return tuple(len(intervals) for intervals in self.levels)


def _check_nonempty(values) -> None:
    if len(values) == 0:
        raise ValueError("profile needs at least one position")


def forward_difference(values: Sequence[int]) -> tuple[int, ...]:
    """Jumps f(i+1) - f(i) for i = 0..n, with f zero-extended at both ends.

    The n+1 jumps always sum to zero.
    """
    _check_nonempty(values)
    out = []
    prev = 0
    for v in values:
        out.append(v - prev)
        prev = v
    out.append(-prev)
    return tuple(out)


def cost(values: Sequence[int]) -> int:
    """Minimal sum(|c_j|) over exact indicator representations of f.

    Equals half the total absolute jump sum, which is the same as the sum
    of upward jumps alone (or downward jumps alone).
    """
    _check_nonempty(values)
    total = 0
    prev = 0
    for v in values:
        total += abs(v - prev)
        prev = v
    total += abs(prev)
    return total // 2


def superlevel_decomposition(values: Sequence[int]) -> LevelDecomposition:
    """Per-level maximal intervals of {f >= level} for a nonnegative profile."""
    _check_nonempty(values)
    vals = list(values)
    if min(vals) < 0:
        raise ValueError("superlevel decomposition requires nonnegative values")
    n = len(vals)
    levels = []
    for level in range(1, max(vals) + 1):
        intervals = []
        start = None
        for i, v in enumerate(vals, start=1):
            if v >= level:
                if start is None:
                    start = i
            elif start is not None:
                intervals.append((start, i - 1))
                start = None
        if start is not None:
            intervals.append((start, n))
        levels.append(tuple(intervals))
    return LevelDecomposition(tuple(levels))


def _blocks_py(vals: list) -> tuple[list, list, list]:
    """Merged superlevel blocks of a nonnegative profile, via one stack sweep.

    Returns parallel lists (a, b, mult): interval [a, b] is a maximal
    interval of {f >= level} for exactly `mult` consecutive levels. Emitting
    each distinct interval once with its multiplicity is what "merging equal
    summands" across levels amounts to, because the levels at which a fixed
    interval is maximal always form a contiguous range.
    """
    out_a: list = []
    out_b: list = []
    out_c: list = []
    stack_s: list = []
    stack_h: list = []
    prev = 0
    pos = 0
    for h in vals:
        pos += 1
        if h > prev:
            stack_s.append(pos)
            stack_h.append(h)
        elif h < prev:
            start = pos
            while stack_h and stack_h[-1] > h:
                s = stack_s.pop()
                top = stack_h.pop()
                below = stack_h[-1] if stack_h else 0
                lo = below if below > h else h
                out_a.append(s)
                out_b.append(pos - 1)
                out_c.append(top - lo)
                start = s
            if h > 0 and (not stack_h or stack_h[-1] < h):
                stack_s.append(start)
                stack_h.append(h)
        prev = h
    return out_a, out_b, out_c


def _blocks_arrays(vals: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Dispatch the block sweep to the numba kernel for large inputs."""
    global _jit_blocks, _jit_unavailable
    if vals.shape[0] >= _JIT_MIN_SIZE and not _jit_unavailable:
        if _jit_blocks is None:
            try:
                from combolock._sweep import jit_blocks

                _jit_blocks = jit_blocks
            except ImportError:
                _jit_unavailable = True
        if _jit_blocks is not None:
            return _jit_blocks(np.ascontiguousarray(vals, dtype=np.int64))
    a, b, c = _blocks_py(vals.tolist() + [0])
    return (
        np.asarray(a, dtype=np.int64),
        np.asarray(b, dtype=np.int64),
        np.asarray(c, dtype=np.int64),
    )


def minimal_representation(values: Sequence[int] | np.ndarray) -> RotationPlan:
    """Cheapest exact indicator representation of an integer profile.

    The returned plan satisfies f = sum_j c_j * indicator([a_j, b_j])
    pointwise (plain integer arithmetic, no modulus) with total cost equal
    to ``cost(values)``. Intervals are distinct and sorted.
    """
    vals = np.asarray(values, dtype=np.int64)
    if vals.ndim != 1:
        raise ValueError("profile must be one-dimensional")
    _check_nonempty(vals)
    pos_a, pos_b, pos_c = _blocks_arrays(np.where(vals > 0, vals, 0))
    neg_a, neg_b, neg_c = _blocks_arrays(np.where(vals < 0, -vals, 0))
    a = np.concatenate([pos_a, neg_a])
    b = np.concatenate([pos_b, neg_b])
    c = np.concatenate([pos_c, -neg_c])
    order = np.lexsort((np.sign(c), b, a))
    return RotationPlan._from_sorted_arrays(a[order], b[order], c[order])
