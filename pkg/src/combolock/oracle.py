"""Independent brute-force solvers used to certify the closed-form results.

Two deliberately different routes:

* breadth-first search over the full combination state space, where every
  single rotation (interval, direction) is an edge of cost 1;
* exhaustive minimization over per-jump wraparound choices: pick k'(i) in a
  small range for every jump position, subject to sum(k') = 0, and score
  half the total absolute adjusted jump sum.

Both are exponential and guarded by an explicit budget; exceeding it raises
rather than returning a wrong answer.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from combolock.solver import DiffProfile


class BudgetExceededError(RuntimeError):
    """Search declined: the requested state space exceeds the budget."""


@dataclass(frozen=True)
class SearchBudget:
    """Caps applied before a brute-force search is attempted."""

    max_states: int = 5_000_000
    max_n: int = 16
    max_N: int = 1024


def _check_bfs_budget(n: int, modulus: int, budget: SearchBudget) -> None:
    if n > budget.max_n or modulus > budget.max_N or modulus**n > budget.max_states:
        raise BudgetExceededError(
            f"state space {modulus}^{n} exceeds budget "
            f"(max_states={budget.max_states}, max_n={budget.max_n}, "
            f"max_N={budget.max_N})"
        )


def _neighbor_offsets(state: int, digits: list, weights: list, modulus: int):
    """Indices of all states one rotation away from `state`."""
    n = len(digits)
    for a in range(n):
        up = state
        down = state
        for b in range(a, n):
            d = digits[b]
            up += weights[b] * (1 - modulus if d == modulus - 1 else 1)
            down += weights[b] * (modulus - 1 if d == 0 else -1)
            yield up
            yield down


def _bfs(n: int, modulus: int, start: int, target: int | None):
    """BFS over mixed-radix encoded states; early exit when target is hit.

    Returns the distance to `target`, or the full distance list when
    `target` is None. Unreachable is impossible: single-dial rotations alone
    connect the space.
    """
    total = modulus**n
    weights = [modulus**i for i in range(n)]
    dist = [-1] * total
    dist[start] = 0
    if target == start:
        return 0
    queue = deque([start])
    while queue:
        state = queue.popleft()
        here = dist[state]
        digits = [(state // w) % modulus for w in weights]
        for nxt in _neighbor_offsets(state, digits, weights, modulus):
            if dist[nxt] < 0:
                dist[nxt] = here + 1
                if nxt == target:
                    return here + 1
                queue.append(nxt)
    return dist


def bfs_min_rotations(profile: DiffProfile, budget: SearchBudget | None = None) -> int:
    """Shortest rotation count from the profile to all-zeros, by state BFS."""
    budget = budget or SearchBudget()
    n = profile.n
    modulus = profile.modulus
    _check_bfs_budget(n, modulus, budget)
    weights = [modulus**i for i in range(n)]
    start = sum(v * w for v, w in zip(profile.values, weights))
    return _bfs(n, modulus, start, target=0)


def bfs_distance_table(n: int, modulus: int, budget: SearchBudget | None = None) -> list:
    """Rotation distance from every state to all-zeros, indexed mixed-radix.

    State s encodes digits (s // N^i) % N for i = 0..n-1. The rotation edge
    set is symmetric, so one sweep from zero covers every instance; this is
    what exhaustive cross-checks iterate over.
    """
    budget = budget or SearchBudget()
    _check_bfs_budget(n, modulus, budget)
    return _bfs(n, modulus, 0, target=None)


def exhaustive_p3(
    profile: DiffProfile,
    range_bound: int = 1,
    budget: SearchBudget | None = None,
) -> int:
    """Minimize half the adjusted jump sum over bounded wraparound choices.

    Enumerates every k' : {0..n} -> [-range_bound, range_bound] with
    sum(k') = 0 and returns the minimum of (1/2) * sum_i |delta(i) + N*k'(i)|.
    With range_bound >= 1 this equals the minimal rotation count; raising
    the bound further never improves the result.
    """
    if range_bound < 1:
        raise ValueError(f"range_bound must be >= 1, got {range_bound}")
    budget = budget or SearchBudget()
    n = profile.n
    if (2 * range_bound + 1) ** (n + 1) > budget.max_states:
        raise BudgetExceededError(
            f"{2 * range_bound + 1}^{n + 1} wraparound vectors exceed budget "
            f"(max_states={budget.max_states})"
        )
    delta = profile.delta
    modulus = profile.modulus
    best = sum(abs(d) for d in delta)  # k' = 0 is always feasible
    choices = range(-range_bound, range_bound + 1)

    def descend(i: int, balance: int, acc: int) -> None:
        nonlocal best
        if acc >= best:
            return
        remaining = n + 1 - i
        if abs(balance) > range_bound * remaining:
            return  # sum(k') = 0 is out of reach
        if i > n:
            best = acc
            return
        d = delta[i]
        for k in choices:
            descend(i + 1, balance + k, acc + abs(d + modulus * k))

    descend(0, 0, 0)
    return best // 2
