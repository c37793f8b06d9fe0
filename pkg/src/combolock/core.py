"""Domain types for combination locks: combinations, rotations, and plans.

A lock has n adjacent dials, each showing a digit in [0, N-1] for a fixed
modulus N. One rotation picks a contiguous dial interval [a, b] (1-based,
inclusive) and adds +1 or -1 to every digit in it, modulo N. A rotation plan
aggregates rotations of the same interval into a single signed count.

All types are immutable and all operations are pure functions, so everything
here is safe to share across threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

PlanEntry = tuple[int, int, int]  # (a, b, c): rotate dials a..b by c net steps


@dataclass(frozen=True)
class Combination:
    """Digits shown by an n-dial lock, dial positions 1..n.

    Digits are reduced modulo `modulus` on construction, so arbitrary
    integers are accepted (useful for wraparound arithmetic). File and CLI
    boundaries validate ranges strictly before building one of these.
    """

    modulus: int
    digits: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.modulus < 1:
            raise ValueError(f"modulus must be a positive integer, got {self.modulus}")
        digits = tuple(self.digits)
        if not digits:
            raise ValueError("a combination needs at least one dial")
        if min(digits) < 0 or max(digits) >= self.modulus:
            digits = tuple(d % self.modulus for d in digits)
        object.__setattr__(self, "digits", digits)

    @property
    def n(self) -> int:
        """Number of dials."""
        return len(self.digits)


@dataclass(frozen=True)
class Rotation:
    """A single rotation: dials a..b all move one step in `direction` (+1/-1)."""

    a: int
    b: int
    direction: int

    def __post_init__(self) -> None:
        if not 1 <= self.a <= self.b:
            raise ValueError(f"need 1 <= a <= b, got interval [{self.a}, {self.b}]")
        if self.direction not in (1, -1):
            raise ValueError(f"direction must be +1 or -1, got {self.direction}")


@dataclass(frozen=True)
class RotationPlan:
    """A set of net rotations, one entry (a, b, c) per distinct interval.

    An entry means: rotate the dials a..b |c| times, in the +1 direction if
    c > 0 and the -1 direction if c < 0. Entries are normalized to ascending
    (a, b) order on construction and interval pairs must be distinct, so
    equal plans compare equal. The total cost is the rotation count sum(|c|).
    """

    entries: tuple[PlanEntry, ...]

    def __post_init__(self) -> None:
        entries = []
        seen = set()
        for entry in self.entries:
            a, b, c = entry
            if not 1 <= a <= b:
                raise ValueError(f"bad interval [{a}, {b}] in plan entry")
            if c == 0:
                raise ValueError(f"zero rotation count for interval [{a}, {b}]")
            if (a, b) in seen:
                raise ValueError(f"duplicate interval [{a}, {b}] in plan")
            seen.add((a, b))
            entries.append((a, b, c))
        entries.sort()
        object.__setattr__(self, "entries", tuple(entries))

    @cached_property
    def cost(self) -> int:
        """Total number of single rotations the plan performs."""
        return sum(abs(c) for _, _, c in self.entries)

    @classmethod
    def _from_sorted_arrays(cls, a, b, c) -> "RotationPlan":
        # Trusted fast path for solver output: entries already sorted,
        # distinct, and range-checked. Skips per-entry validation, which
        # matters for million-entry plans.
        plan = object.__new__(cls)
        object.__setattr__(plan, "entries", tuple(zip(a.tolist(), b.tolist(), c.tolist())))
        return plan


def apply_rotation(comb: Combination, rot: Rotation) -> Combination:
    """Apply one rotation and return the resulting combination."""
    if rot.b > comb.n:
        raise ValueError(f"interval [{rot.a}, {rot.b}] exceeds {comb.n} dials")
    modulus = comb.modulus
    digits = list(comb.digits)
    for i in range(rot.a - 1, rot.b):
        digits[i] = (digits[i] + rot.direction) % modulus
    return Combination(modulus, tuple(digits))


def apply_plan(comb: Combination, plan: RotationPlan) -> Combination:
    """Apply every entry of a plan (order is irrelevant to the result)."""
    n = comb.n
    modulus = comb.modulus
    # Difference-array accumulation keeps this O(n + entries) even when
    # intervals overlap heavily.
    acc = [0] * (n + 1)
    for a, b, c in plan.entries:
        if b > n:
            raise ValueError(f"interval [{a}, {b}] exceeds {n} dials")
        acc[a - 1] += c
        acc[b] -= c
    out = []
    shift = 0
    for i, d in enumerate(comb.digits):
        shift += acc[i]
        out.append((d + shift) % modulus)
    return Combination(modulus, tuple(out))


def plan_cost(plan: RotationPlan) -> int:
    """Total rotation count sum(|c|) of a plan."""
    return plan.cost
