"""Scale-Balanced Citation Index.

Papers are split by co-author count into large-scale (``a >= tau``) and
small-scale (``a < tau``) sets. Each paper earns credit ``c / f(a)``; the
index blends the two aggregated credits through a normalization ``g``::

    SBCI = alpha * g(W_L) + (1 - alpha) * g(W_S)
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .classic import InvalidThreshold
from .model import AuthorProfile, Cohort

DEFAULT_TAU = 26


@dataclass(frozen=True)
class PenaltyFn:
    """Nondecreasing author-count penalty f with f(a) > 0 for a >= 1."""

    name: str
    label: str
    scalar: Callable[[float], float]
    array: Callable[[np.ndarray], np.ndarray]

    def __call__(self, a):
        return self.scalar(a)

    def __repr__(self):
        return f"PenaltyFn({self.name})"


@dataclass(frozen=True)
class NormFn:
    """Nondecreasing credit normalization g with g(0) = 0."""

    name: str
    label: str
    scalar: Callable[[float], float]
    array: Callable[[np.ndarray], np.ndarray]

    def __call__(self, w):
        return self.scalar(w)

    def __repr__(self):
        return f"NormFn({self.name})"


PENALTIES = {
    "identity": PenaltyFn("identity", "a", float, lambda a: np.asarray(a, dtype=np.float64)),
    "sqrt": PenaltyFn("sqrt", "sqrt(a)", math.sqrt, np.sqrt),
}
NORMS = {
    "identity": NormFn("identity", "w", float, lambda w: np.asarray(w, dtype=np.float64)),
    "log1p": NormFn("log1p", "log1p(w)", math.log1p, np.log1p),
}

_PENALTY_ALIASES = {"id": "identity", "a": "identity", "linear": "identity", "sqrt(a)": "sqrt", "√": "sqrt"}
_NORM_ALIASES = {"id": "identity", "w": "identity", "log": "log1p", "log1p(w)": "log1p"}


def register_penalty(fn: PenaltyFn) -> None:
    PENALTIES[fn.name] = fn


def register_norm(fn: NormFn) -> None:
    NORMS[fn.name] = fn


def penalty(name: str | PenaltyFn) -> PenaltyFn:
    if isinstance(name, PenaltyFn):
        return name
    key = _PENALTY_ALIASES.get(name, name)
    try:
        return PENALTIES[key]
    except KeyError:
        raise ValueError(f"unknown penalty function {name!r}; choose from {sorted(PENALTIES)}") from None


def norm(name: str | NormFn) -> NormFn:
    if isinstance(name, NormFn):
        return name
    key = _NORM_ALIASES.get(name, name)
    try:
        return NORMS[key]
    except KeyError:
        raise ValueError(f"unknown normalization function {name!r}; choose from {sorted(NORMS)}") from None


@dataclass(frozen=True)
class SbciParams:
    alpha: float = 0.6
    tau: int = DEFAULT_TAU
    penalty: PenaltyFn = PENALTIES["sqrt"]
    norm: NormFn = NORMS["log1p"]

    def __post_init__(self):
        if not 0.0 <= self.alpha <= 1.0:
            raise ValueError(f"alpha must lie in [0, 1], got {self.alpha}")
        if self.tau < 1:
            raise InvalidThreshold(f"tau must be >= 1, got {self.tau}")
        object.__setattr__(self, "penalty", penalty(self.penalty))
        object.__setattr__(self, "norm", norm(self.norm))

    @property
    def label(self) -> str:
        """Column header in ``alpha/f/g`` form, e.g. ``0.6/sqrt(a)/log1p(w)``."""
        return f"{self.alpha:g}/{self.penalty.label}/{self.norm.label}"


@dataclass(frozen=True)
class CreditAggregate:
    w_large: float
    w_small: float


def partition(profile: AuthorProfile, tau: int = DEFAULT_TAU) -> tuple[list[int], list[int]]:
    """Indices of L-papers (a >= tau) and S-papers (a < tau)."""
    if tau < 1:
        raise InvalidThreshold(f"tau must be >= 1, got {tau}")
    large, small = [], []
    for i, p in enumerate(profile.publications):
        (large if p.coauthors >= tau else small).append(i)
    return large, small


def paper_credit(c: float, a: int, penalty: PenaltyFn) -> float:
    return c / penalty(a)


def credit_aggregate(profile: AuthorProfile, tau: int, penalty: PenaltyFn) -> CreditAggregate:
    """Unweighted sums of per-paper credit over L- and S-papers."""
    large, small = partition(profile, tau)
    pubs = profile.publications
    w_large = math.fsum(paper_credit(pubs[i].citations, pubs[i].coauthors, penalty) for i in large)
    w_small = math.fsum(paper_credit(pubs[i].citations, pubs[i].coauthors, penalty) for i in small)
    return CreditAggregate(w_large, w_small)


def combine(agg: CreditAggregate, params: SbciParams) -> float:
    g = params.norm
    return params.alpha * g(agg.w_large) + (1.0 - params.alpha) * g(agg.w_small)


def sbci(profile: AuthorProfile, params: SbciParams = SbciParams()) -> float:
    return combine(credit_aggregate(profile, params.tau, params.penalty), params)


class CohortArrays:
    """Flattened per-paper arrays for vectorised evaluation over a cohort.

    ``owner[k]`` is the member index of paper ``k``.
    """

    def __init__(self, cohort: Cohort):
        self.ids = [m.id for m in cohort.members]
        self.n_members = len(self.ids)
        counts = [len(m.publications) for m in cohort.members]
        self.owner = np.repeat(np.arange(self.n_members), counts)
        self.citations = np.fromiter(
            (p.citations for m in cohort.members for p in m.publications), dtype=np.float64, count=sum(counts)
        )
        self.coauthors = np.fromiter(
            (p.coauthors for m in cohort.members for p in m.publications), dtype=np.int64, count=sum(counts)
        )

    def credits(self, tau: int, penalty: PenaltyFn) -> tuple[np.ndarray, np.ndarray]:
        """Per-member (W_L, W_S) arrays."""
        f = penalty.array(self.coauthors.astype(np.float64))
        w = self.citations / f
        is_large = self.coauthors >= tau
        w_large = np.bincount(self.owner, weights=np.where(is_large, w, 0.0), minlength=self.n_members)
        w_small = np.bincount(self.owner, weights=np.where(is_large, 0.0, w), minlength=self.n_members)
        return w_large, w_small


def cohort_credit_aggregates(cohort: Cohort, tau: int, penalty: PenaltyFn) -> tuple[np.ndarray, np.ndarray]:
    if tau < 1:
        raise InvalidThreshold(f"tau must be >= 1, got {tau}")
    return CohortArrays(cohort).credits(tau, penalty)


def cohort_sbci(cohort: Cohort, params: SbciParams) -> np.ndarray:
    w_large, w_small = cohort_credit_aggregates(cohort, params.tau, params.penalty)
    g = params.norm.array
    return params.alpha * g(w_large) + (1.0 - params.alpha) * g(w_small)
