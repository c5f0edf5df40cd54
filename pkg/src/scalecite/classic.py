"""Baseline author-level indices: i_a, h, g, individual h, fractional h and the
exponential fractional h-index.

Every function is pure and independent of publication order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .model import AuthorProfile


class InvalidThreshold(ValueError):
    pass


@dataclass(frozen=True)
class ExpFracParams:
    """Decay rate for the exponential fractional h-index.

    ``beta`` must be positive. ``limit=True`` additionally admits
    ``beta == 0``, the limit in which the index reduces to the plain h-index.
    """

    beta: float = 0.1
    limit: bool = False

    def __post_init__(self):
        if not math.isfinite(self.beta) or self.beta < 0:
            raise ValueError(f"beta must be a finite value > 0, got {self.beta}")
        if self.beta == 0 and not self.limit:
            raise ValueError("beta = 0 is only allowed with limit=True")


def _h_of(values: Sequence[float]) -> int:
    # values sorted nonincreasing; largest i (1-based) with values[i-1] >= i
    h = 0
    for i, v in enumerate(values, 1):
        if v >= i:
            h = i
        else:
            break
    return h


def i_a_index(profile: AuthorProfile, a: int = 10) -> int:
    """Number of papers cited at least ``a`` times (i10 for a = 10)."""
    if a < 1:
        raise InvalidThreshold(f"threshold a must be >= 1, got {a}")
    return sum(1 for p in profile.publications if p.citations >= a)


def h_index(profile: AuthorProfile) -> int:
    return _h_of(sorted(profile.citations, reverse=True))


def g_index(profile: AuthorProfile) -> int:
    """Largest k <= N such that the top k papers hold at least k^2 citations."""
    g = 0
    total = 0
    for k, c in enumerate(sorted(profile.citations, reverse=True), 1):
        total += c
        if total >= k * k:
            g = k
    return g


def h_core(profile: AuthorProfile) -> list[int]:
    """Indices of the papers realising the h-index.

    Ties at the boundary go to the paper with fewer co-authors, then to the
    earlier input position.
    """
    pubs = profile.publications
    order = sorted(range(len(pubs)), key=lambda i: (-pubs[i].citations, pubs[i].coauthors, i))
    return order[: h_index(profile)]


def individual_h_index(profile: AuthorProfile) -> float:
    """h^2 divided by the total author count of the h-core; 0 when h = 0."""
    core = h_core(profile)
    if not core:
        return 0.0
    n_a = sum(profile.publications[i].coauthors for i in core)
    return len(core) ** 2 / n_a


def fractional_h_index(profile: AuthorProfile) -> int:
    shares = sorted((p.citations / p.coauthors for p in profile.publications), reverse=True)
    return _h_of(shares)


def decayed_citations(profile: AuthorProfile, params: ExpFracParams) -> list[float]:
    return [p.citations * math.exp(-params.beta * (p.coauthors - 1)) for p in profile.publications]


def exp_fractional_h_index(profile: AuthorProfile, params: ExpFracParams) -> int:
    """h-index over citations decayed by exp(-beta * (a - 1))."""
    return _h_of(sorted(decayed_citations(profile, params), reverse=True))


def all_metrics(profile: AuthorProfile, beta: float = 0.1, a: int = 10) -> dict:
    """Every classic index for one profile, keyed by short name."""
    return {
        "n_papers": profile.n_papers,
        "total_citations": profile.total_citations,
        f"i{a}": i_a_index(profile, a),
        "h": h_index(profile),
        "g": g_index(profile),
        "h_I": individual_h_index(profile),
        "h_frac": fractional_h_index(profile),
        "h_exp": exp_fractional_h_index(profile, ExpFracParams(beta)),
    }
