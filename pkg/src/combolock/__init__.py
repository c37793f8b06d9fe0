"""Minimal-rotation solver for adjacent-dial combination locks."""

from combolock.core import (
    Combination,
    Rotation,
    RotationPlan,
    apply_plan,
    apply_rotation,
    plan_cost,
)
from combolock.oracle import (
    BudgetExceededError,
    SearchBudget,
    bfs_distance_table,
    bfs_min_rotations,
    exhaustive_p3,
)
from combolock.solver import (
    DiffProfile,
    JumpSets,
    LiftedFunction,
    Pairing,
    build_lift,
    diff_profile,
    gain,
    jump_sets,
    make_pairing,
    optimal_value,
    solve,
)
from combolock.stats import TrialReport, estimate_mean, predicted_mean, random_diff
from combolock.variation import (
    LevelDecomposition,
    cost,
    forward_difference,
    minimal_representation,
    superlevel_decomposition,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetExceededError",
    "Combination",
    "DiffProfile",
    "JumpSets",
    "LevelDecomposition",
    "LiftedFunction",
    "Pairing",
    "Rotation",
    "RotationPlan",
    "SearchBudget",
    "TrialReport",
    "apply_plan",
    "apply_rotation",
    "bfs_distance_table",
    "bfs_min_rotations",
    "build_lift",
    "cost",
    "diff_profile",
    "estimate_mean",
    "exhaustive_p3",
    "forward_difference",
    "gain",
    "jump_sets",
    "make_pairing",
    "minimal_representation",
    "optimal_value",
    "plan_cost",
    "predicted_mean",
    "random_diff",
    "solve",
    "superlevel_decomposition",
]
