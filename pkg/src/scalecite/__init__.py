"""Author-level citation indices, the Scale-Balanced Citation Index (SBCI),
grid-search tuning of its parameters and synthetic researcher cohorts."""

from .classic import (
    ExpFracParams,
    InvalidThreshold,
    exp_fractional_h_index,
    fractional_h_index,
    g_index,
    h_index,
    i_a_index,
    individual_h_index,
)
from .model import (
    AuthorProfile,
    Cohort,
    DuplicateIdsInCohort,
    NegativeCitations,
    Publication,
    ValidationError,
    ZeroAuthors,
    validate_cohort,
    validate_profile,
)
from .sbci import CreditAggregate, NormFn, PenaltyFn, SbciParams, credit_aggregate, paper_credit, partition, sbci
from .synth import GroupSpec, SynthConfig, generate_cohort
from .tuner import ObjectiveBreakdown, Ranking, TunerConfig, grid_search, objective, perturb_citations, rank_cohort

__version__ = "0.1.0"

__all__ = [
    "AuthorProfile",
    "Cohort",
    "CreditAggregate",
    "DuplicateIdsInCohort",
    "ExpFracParams",
    "GroupSpec",
    "InvalidThreshold",
    "NegativeCitations",
    "NormFn",
    "ObjectiveBreakdown",
    "PenaltyFn",
    "Publication",
    "Ranking",
    "SbciParams",
    "SynthConfig",
    "TunerConfig",
    "ValidationError",
    "ZeroAuthors",
    "credit_aggregate",
    "exp_fractional_h_index",
    "fractional_h_index",
    "g_index",
    "generate_cohort",
    "grid_search",
    "h_index",
    "i_a_index",
    "individual_h_index",
    "objective",
    "paper_credit",
    "partition",
    "perturb_citations",
    "rank_cohort",
    "sbci",
    "validate_cohort",
    "validate_profile",
]
