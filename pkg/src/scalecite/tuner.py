"""Grid-search tuning of SBCI parameters over a composite objective.

For a cohort of N researchers with per-member transformed credits
``G_L = g(W_L)`` and ``G_S = g(W_S)`` the objective is::

    total = discriminative - l1 * mean_balance - l2 * variance_balance - l3 * stability

    discriminative   = alpha * Var(G_L) + (1 - alpha) * Var(G_S)
    mean_balance     = |alpha * mean(G_L) + (1 - alpha) * mean(G_S)|
    variance_balance = |alpha * Var(G_L) - (1 - alpha) * Var(G_S)|
    stability        = mean_i |rank(i) - rank_eps(i)|

Var is the population variance. ``rank_eps`` ranks the cohort after adding
``epsilon`` citations to every paper.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from typing import Sequence

import numpy as np

from .model import Cohort
from .sbci import DEFAULT_TAU, NORMS, PENALTIES, CohortArrays, NormFn, PenaltyFn, SbciParams, norm, penalty

PAPER_ALPHA_GRID = (0.0, 0.2, 0.4, 0.6, 0.8, 1.0)

MEAN_BALANCE_MODES = ("sum", "difference")


class EmptyCohort(ValueError):
    pass


@dataclass(frozen=True)
class TunerConfig:
    """Grid and weights for :func:`grid_search`.

    ``lambda1`` has no published value; 1.0 is a placeholder default.
    ``mean_balance`` selects ``|a*mu_L + (1-a)*mu_S|`` ("sum", as the formula
    is printed) or ``|a*mu_L - (1-a)*mu_S|`` ("difference").
    """

    alpha_grid: tuple[float, ...] = PAPER_ALPHA_GRID
    penalty_grid: tuple[PenaltyFn, ...] = (PENALTIES["sqrt"], PENALTIES["identity"])
    norm_grid: tuple[NormFn, ...] = (NORMS["log1p"], NORMS["identity"])
    tau: int = DEFAULT_TAU
    lambda1: float = 1.0
    lambda2: float = 1.0
    lambda3: float = 1.0
    epsilon: int = 10
    mean_balance: str = "sum"

    def __post_init__(self):
        for name in ("alpha_grid", "penalty_grid", "norm_grid"):
            grid = tuple(getattr(self, name))
            if not grid:
                raise ValueError(f"{name} must not be empty")
            object.__setattr__(self, name, grid)
        object.__setattr__(self, "penalty_grid", tuple(penalty(f) for f in self.penalty_grid))
        object.__setattr__(self, "norm_grid", tuple(norm(g) for g in self.norm_grid))
        if any(not 0.0 <= a <= 1.0 for a in self.alpha_grid):
            raise ValueError("alpha_grid values must lie in [0, 1]")
        if min(self.lambda1, self.lambda2, self.lambda3) < 0:
            raise ValueError("lambda weights must be >= 0")
        if self.epsilon < 0:
            raise ValueError("epsilon must be >= 0")
        if self.tau < 1:
            raise ValueError("tau must be >= 1")
        if self.mean_balance not in MEAN_BALANCE_MODES:
            raise ValueError(f"mean_balance must be one of {MEAN_BALANCE_MODES}")

    def points(self) -> list[SbciParams]:
        """Grid points in table order: penalty, then normalization, then alpha."""
        return [
            SbciParams(alpha, self.tau, f, g)
            for f, g, alpha in itertools.product(self.penalty_grid, self.norm_grid, self.alpha_grid)
        ]


@dataclass(frozen=True)
class ObjectiveBreakdown:
    discriminative: float
    mean_balance: float
    variance_balance: float
    stability: float
    total: float


@dataclass(frozen=True)
class Ranking:
    """``(author id, rank)`` pairs in rank order; ranks are 1-based."""

    entries: tuple[tuple[str, int], ...] = ()

    def as_dict(self) -> dict[str, int]:
        return dict(self.entries)

    def __len__(self):
        return len(self.entries)


def ranks_from_scores(scores: np.ndarray, ids: Sequence[str]) -> np.ndarray:
    """Rank of each member (in member order): score descending, id ascending on ties."""
    scores = np.asarray(scores, dtype=np.float64)
    id_order = np.empty(len(ids), dtype=np.int64)
    id_order[sorted(range(len(ids)), key=ids.__getitem__)] = np.arange(len(ids))
    order = np.lexsort((id_order, -scores))
    ranks = np.empty(len(ids), dtype=np.int64)
    ranks[order] = np.arange(1, len(ids) + 1)
    return ranks


def rank_cohort(cohort: Cohort, params: SbciParams) -> Ranking:
    arrays = CohortArrays(cohort)
    w_large, w_small = arrays.credits(params.tau, params.penalty)
    g = params.norm.array
    scores = params.alpha * g(w_large) + (1.0 - params.alpha) * g(w_small)
    ranks = ranks_from_scores(scores, arrays.ids)
    order = np.argsort(ranks)
    return Ranking(tuple((arrays.ids[i], int(ranks[i])) for i in order))


def perturb_citations(cohort: Cohort, epsilon: int) -> Cohort:
    """New cohort with ``epsilon`` citations added to every paper."""
    if epsilon == 0:
        return cohort
    members = tuple(
        replace(m, publications=tuple(replace(p, citations=p.citations + epsilon) for p in m.publications))
        for m in cohort.members
    )
    return Cohort(members, f"{cohort.provenance} +{epsilon} citations/paper".strip())


def _evaluate(base: CohortArrays, shifted: CohortArrays, params: SbciParams, config: TunerConfig) -> ObjectiveBreakdown:
    alpha = params.alpha
    g = params.norm.array
    w_large, w_small = base.credits(params.tau, params.penalty)
    g_large, g_small = g(w_large), g(w_small)

    var_large, var_small = np.var(g_large), np.var(g_small)
    mean_large, mean_small = np.mean(g_large), np.mean(g_small)
    sign = 1.0 if config.mean_balance == "sum" else -1.0

    discriminative = float(alpha * var_large + (1 - alpha) * var_small)
    mean_balance = float(abs(alpha * mean_large + sign * (1 - alpha) * mean_small))
    variance_balance = float(abs(alpha * var_large - (1 - alpha) * var_small))

    scores = alpha * g_large + (1 - alpha) * g_small
    if shifted is base:
        stability = 0.0
    else:
        p_large, p_small = shifted.credits(params.tau, params.penalty)
        p_scores = alpha * g(p_large) + (1 - alpha) * g(p_small)
        rank = ranks_from_scores(scores, base.ids)
        rank_eps = ranks_from_scores(p_scores, shifted.ids)
        stability = float(np.mean(np.abs(rank - rank_eps)))

    total = discriminative - config.lambda1 * mean_balance - config.lambda2 * variance_balance - config.lambda3 * stability
    return ObjectiveBreakdown(discriminative, mean_balance, variance_balance, stability, total)


def _prepare(cohort: Cohort, epsilon: int) -> tuple[CohortArrays, CohortArrays]:
    if len(cohort) == 0:
        raise EmptyCohort("objective needs a cohort with at least one member")
    base = CohortArrays(cohort)
    shifted = base if epsilon == 0 else CohortArrays(perturb_citations(cohort, epsilon))
    return base, shifted


def objective(cohort: Cohort, params: SbciParams, config: TunerConfig = TunerConfig()) -> ObjectiveBreakdown:
    base, shifted = _prepare(cohort, config.epsilon)
    return _evaluate(base, shifted, params, config)


def best_row(table: Sequence[tuple[SbciParams, ObjectiveBreakdown]]) -> int:
    """Index of the argmax by total; ties go to smaller alpha, then earlier rows."""
    return min(range(len(table)), key=lambda i: (-table[i][1].total, table[i][0].alpha, i))


def grid_search(
    cohort: Cohort, config: TunerConfig = TunerConfig(), workers: int = 1
) -> tuple[SbciParams, list[tuple[SbciParams, ObjectiveBreakdown]]]:
    """Evaluate every (alpha, f, g) at fixed tau; return (best params, full table).

    ``workers > 1`` evaluates grid points on a thread pool. Results are
    assembled in grid order, so the table does not depend on scheduling.
    """
    base, shifted = _prepare(cohort, config.epsilon)
    points = config.points()
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(lambda p: _evaluate(base, shifted, p, config), points))
    else:
        rows = [_evaluate(base, shifted, p, config) for p in points]
    table = list(zip(points, rows))
    return table[best_row(table)][0], table
