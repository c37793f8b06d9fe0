"""Command-line interface: solve, verify, crosscheck, and stats.

File formats (JSON, 1-based dial positions):

* instance: {"n": int, "modulus": int, "locked": [...], "unlocked": [...]}
* plan:     {"n": int, "modulus": int,
             "entries": [{"a": int, "b": int, "c": int}, ...], "cost": int}

Machine-readable payloads go to stdout, human summaries to stderr. Exit
codes: 0 success, 1 input or usage error, 2 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from combolock.core import Combination, RotationPlan, apply_plan
from combolock.oracle import (
    BudgetExceededError,
    SearchBudget,
    bfs_distance_table,
    exhaustive_p3,
)
from combolock.solver import DiffProfile, diff_profile, optimal_value, solve
from combolock.stats import estimate_mean, random_diff

# Random-mode crosschecks add the BFS oracle only for state spaces up to
# this size; the wraparound enumeration oracle always runs.
_RANDOM_BFS_STATES = 200_000


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors by default; 2 is reserved for
    # failed verification here, so remap to 1.
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _fail(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return 1


def _parse_digits(text: str, modulus: int) -> list[int]:
    """Parse a digit list: CSV always, bare digit strings when modulus is 10."""
    s = text.strip()
    if "," in s:
        return [int(part) for part in s.split(",")]
    if modulus == 10 and len(s) > 1 and s.isdigit():
        return [int(ch) for ch in s]
    return [int(s)]


def _check_digits(name: str, digits: list[int], modulus: int) -> None:
    for d in digits:
        if not isinstance(d, int) or isinstance(d, bool) or not 0 <= d < modulus:
            raise ValueError(f"{name} digit {d!r} out of range [0, {modulus - 1}]")


def _load_instance(args) -> tuple[Combination, Combination]:
    if args.input:
        payload = json.loads(Path(args.input).read_text())
        n = payload["n"]
        modulus = payload["modulus"]
        locked = payload["locked"]
        unlocked = payload["unlocked"]
    else:
        if args.locked is None or args.unlocked is None:
            raise ValueError("provide --input FILE or both --locked and --unlocked")
        modulus = args.modulus
        locked = _parse_digits(args.locked, modulus)
        unlocked = _parse_digits(args.unlocked, modulus)
        n = args.n if args.n is not None else len(locked)
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")
    if not isinstance(modulus, int) or modulus < 1:
        raise ValueError(f"modulus must be a positive integer, got {modulus!r}")
    if len(locked) != n or len(unlocked) != n:
        raise ValueError(
            f"digit arrays must have length n={n}, "
            f"got {len(locked)} and {len(unlocked)}"
        )
    _check_digits("locked", locked, modulus)
    _check_digits("unlocked", unlocked, modulus)
    return Combination(modulus, tuple(locked)), Combination(modulus, tuple(unlocked))


def _plan_payload(n: int, modulus: int, plan: RotationPlan) -> str:
    return json.dumps(
        {
            "n": n,
            "modulus": modulus,
            "entries": [{"a": a, "b": b, "c": c} for a, b, c in plan.entries],
            "cost": plan.cost,
        },
        indent=2,
    ) + "\n"


def _cmd_solve(args) -> int:
    locked, unlocked = _load_instance(args)
    plan = solve(locked, unlocked)
    text = _plan_payload(locked.n, locked.modulus, plan)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    print(f"optimal: {plan.cost}", file=sys.stderr)
    return 0


def _cmd_verify(args) -> int:
    locked, unlocked = _load_instance(args)
    payload = json.loads(Path(args.plan).read_text())
    if payload["n"] != locked.n or payload["modulus"] != locked.modulus:
        raise ValueError("plan file n/modulus do not match the instance")
    claimed = payload["cost"]
    plan = RotationPlan(
        tuple((e["a"], e["b"], e["c"]) for e in payload["entries"])
    )
    achieved = plan.cost
    print(f"cost: claimed {claimed}, achieved {achieved}")
    if claimed != achieved:
        print("cost mismatch", file=sys.stderr)
        return 2
    if apply_plan(locked, plan) != unlocked:
        print("plan does not transform locked into unlocked", file=sys.stderr)
        return 2
    print("plan ok")
    return 0


def _instances_all(n: int, modulus: int):
    weights = [modulus**i for i in range(n)]
    for state in range(modulus**n):
        yield state, tuple((state // w) % modulus for w in weights)


def _cmd_crosscheck(args) -> int:
    n = args.n
    modulus = args.modulus
    if n is None or modulus is None:
        raise ValueError("crosscheck requires --n and --modulus")
    budget = SearchBudget()
    checked = 0
    if args.mode == "all":
        try:
            table = bfs_distance_table(n, modulus, budget)
        except BudgetExceededError as exc:
            print(f"error: {exc}; use smaller --n/--modulus", file=sys.stderr)
            return 1
        total = modulus**n
        for state, values in _instances_all(n, modulus):
            profile = DiffProfile.from_values(values, modulus)
            fast = optimal_value(profile)
            slow_bfs = table[state]
            slow_p3 = exhaustive_p3(profile, budget=budget)
            if fast != slow_bfs or fast != slow_p3:
                print(
                    f"counterexample: values={values} solver={fast} "
                    f"bfs={slow_bfs} p3={slow_p3}"
                )
                return 2
            checked += 1
        print(f"{checked}/{total} agree")
        return 0
    # random mode: the BFS table joins only for small state spaces
    table = None
    if modulus**n <= _RANDOM_BFS_STATES:
        table = bfs_distance_table(n, modulus, budget)
        weights = [modulus**i for i in range(n)]
    for t in range(args.count):
        profile = random_diff(n, modulus, np.random.default_rng(args.seed ^ t))
        fast = optimal_value(profile)
        slow_p3 = exhaustive_p3(profile, budget=budget)
        ok = fast == slow_p3
        slow_bfs = None
        if table is not None:
            slow_bfs = table[sum(v * w for v, w in zip(profile.values, weights))]
            ok = ok and fast == slow_bfs
        if not ok:
            print(
                f"counterexample: values={profile.values} solver={fast} "
                f"bfs={slow_bfs} p3={slow_p3}"
            )
            return 2
        checked += 1
    print(f"{checked}/{args.count} agree")
    return 0


def _cmd_stats(args) -> int:
    report = estimate_mean(args.n, args.modulus, args.trials, args.seed)
    sys.stdout.write(report.to_json() + "\n")
    return 0


def _build_parser() -> _Parser:
    parser = _Parser(prog="combolock", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p_solve = sub.add_parser("solve", help="compute an optimal rotation plan")
    p_solve.add_argument("--input", help="instance JSON file")
    p_solve.add_argument("--out", help="write the plan here instead of stdout")
    p_solve.add_argument("--n", type=int, help="dial count (inline instances)")
    p_solve.add_argument("--modulus", type=int, default=10)
    p_solve.add_argument("--locked", help="digits, CSV (or digit string when modulus is 10)")
    p_solve.add_argument("--unlocked", help="digits, same format as --locked")

    p_verify = sub.add_parser("verify", help="check a plan against an instance")
    p_verify.add_argument("--input", required=True, help="instance JSON file")
    p_verify.add_argument("--plan", required=True, help="plan JSON file")
    p_verify.add_argument("--n", type=int, help=argparse.SUPPRESS)
    p_verify.add_argument("--modulus", type=int, default=10, help=argparse.SUPPRESS)
    p_verify.add_argument("--locked", help=argparse.SUPPRESS)
    p_verify.add_argument("--unlocked", help=argparse.SUPPRESS)

    p_cross = sub.add_parser(
        "crosscheck", help="compare the solver against brute-force oracles"
    )
    p_cross.add_argument("--n", type=int, required=True)
    p_cross.add_argument("--modulus", type=int, required=True)
    p_cross.add_argument("--mode", choices=("all", "random"), default="all")
    p_cross.add_argument("--count", type=int, default=100, help="random-mode instance count")
    p_cross.add_argument("--seed", type=int, default=0)

    p_stats = sub.add_parser(
        "stats", help="estimate the mean optimal rotation count for random profiles"
    )
    p_stats.add_argument("--n", type=int, required=True)
    p_stats.add_argument("--modulus", type=int, required=True)
    p_stats.add_argument("--trials", type=int, default=10000)
    p_stats.add_argument("--seed", type=int, default=0)
    return parser


_COMMANDS = {
    "solve": _cmd_solve,
    "verify": _cmd_verify,
    "crosscheck": _cmd_crosscheck,
    "stats": _cmd_stats,
}


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except BudgetExceededError as exc:
        print(f"error: {exc}; use smaller --n/--modulus", file=sys.stderr)
        return 1
    except (ValueError, KeyError, TypeError, OSError, json.JSONDecodeError) as exc:
        return _fail(str(exc))


if __name__ == "__main__":
    sys.exit(main())
