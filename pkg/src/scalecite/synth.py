"""Synthetic PhD-student cohorts with heavy-tailed citations and mixed team sizes.

Per paper: year ~ U{years}, team size from the student's group mixture
(Poisson small teams vs a_min + Pareto large teams), citations ~ LogNormal,
then scaled by team size and publication age, rounded and capped.

Each student draws from its own substream spawned from ``(seed, index)``, so
output is identical whether students are generated sequentially or in
parallel.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .model import AuthorProfile, Cohort, Publication

AGE_MODES = ("printed", "inverse")


class FutureYear(ValueError):
    pass


@dataclass(frozen=True)
class GroupSpec:
    """One stratum; ``mix_p`` is the probability a paper uses the Poisson component."""

    label: str
    count: int
    mix_p: float

    def __post_init__(self):
        if self.count < 0:
            raise ValueError("group count must be >= 0")
        if not 0.0 <= self.mix_p <= 1.0:
            raise ValueError("mix_p must lie in [0, 1]")


DEFAULT_GROUPS = (
    GroupSpec("small-only", 800, 1.0),
    GroupSpec("mixed", 100, 0.7),
    GroupSpec("large-only", 100, 0.0),
)


@dataclass(frozen=True)
class SynthConfig:
    mu_c: float = 2.5
    sigma_c: float = 1.2
    lambda_s: float = 4.0
    pareto_shape: float = 1.0
    a_min: int = 26
    groups: tuple[GroupSpec, ...] = DEFAULT_GROUPS
    years: tuple[int, int] = (2020, 2024)
    papers_range: tuple[int, int] = (4, 10)
    cap: int = 5000
    large_coeff: float = 1.5
    small_coeff: float = 0.5
    age_exponent: float = -0.85
    reference_year: int = 2025
    team_cap: int = 1500
    # "printed": c / (ref - y + 1) ** age_exponent (older papers gain more)
    # "inverse": c * (ref - y + 1) ** age_exponent (recent papers gain more)
    age_mode: str = "printed"

    def __post_init__(self):
        object.__setattr__(self, "groups", tuple(self.groups))
        object.__setattr__(self, "years", tuple(self.years))
        object.__setattr__(self, "papers_range", tuple(self.papers_range))
        if self.sigma_c < 0:
            raise ValueError("sigma_c must be >= 0")
        if self.lambda_s <= 0 or self.pareto_shape <= 0:
            raise ValueError("lambda_s and pareto_shape must be > 0")
        if self.a_min < 1:
            raise ValueError("a_min must be >= 1")
        lo, hi = self.papers_range
        if lo < 1 or hi < lo:
            raise ValueError(f"invalid papers_range {self.papers_range}")
        if self.years[1] < self.years[0]:
            raise ValueError(f"invalid years {self.years}")
        if self.years[1] > self.reference_year:
            raise ValueError("years must not extend past reference_year")
        if self.cap <= 0:
            raise ValueError("cap must be > 0")
        if self.team_cap < self.a_min:
            raise ValueError("team_cap must be >= a_min")
        if self.age_mode not in AGE_MODES:
            raise ValueError(f"age_mode must be one of {AGE_MODES}")

    @property
    def n_students(self) -> int:
        return sum(g.count for g in self.groups)


def sample_citations(rng: np.random.Generator, config: SynthConfig) -> float:
    return float(np.exp(rng.normal(config.mu_c, config.sigma_c)))


def sample_small_team(rng: np.random.Generator, config: SynthConfig) -> int:
    # Poisson component, clamped to >= 1 and resampled until below a_min
    while True:
        a = max(1, int(rng.poisson(config.lambda_s)))
        if a < config.a_min:
            return a


def sample_large_team(rng: np.random.Generator, config: SynthConfig) -> int:
    # numpy's pareto() is Lomax (support [0, inf)), so a_min itself is reachable
    return min(config.team_cap, int(math.floor(config.a_min + rng.pareto(config.pareto_shape))))


def sample_team_size(rng: np.random.Generator, group: GroupSpec, config: SynthConfig) -> int:
    if group.mix_p >= 1.0 or (group.mix_p > 0.0 and rng.random() < group.mix_p):
        return sample_small_team(rng, config)
    return sample_large_team(rng, config)


def team_factor(a: int, config: SynthConfig) -> float:
    coeff = config.large_coeff if a >= config.a_min else config.small_coeff
    return 1.0 + coeff * math.log1p(a)


def scale_by_team(c: float, a: int, config: SynthConfig) -> float:
    if a < 1:
        raise ValueError(f"team size must be >= 1, got {a}")
    return c * team_factor(a, config)


def age_factor(year: int, config: SynthConfig) -> float:
    if year > config.reference_year:
        raise FutureYear(f"year {year} is after reference year {config.reference_year}")
    base = config.reference_year - year + 1
    if config.age_mode == "printed":
        return 1.0 / base**config.age_exponent
    return base**config.age_exponent


def adjust_by_age(c: float, year: int, config: SynthConfig) -> float:
    return c * age_factor(year, config)


def finalize_citations(c: float, config: SynthConfig) -> int:
    """Round half up and cap."""
    if c < 0:
        raise ValueError("citations must be >= 0")
    return min(int(math.floor(c + 0.5)), config.cap)


def generate_student(
    rng: np.random.Generator, student_id: str, group: GroupSpec, config: SynthConfig
) -> AuthorProfile:
    lo, hi = config.papers_range
    y0, y1 = config.years
    pubs = []
    for _ in range(int(rng.integers(lo, hi, endpoint=True))):
        year = int(rng.integers(y0, y1, endpoint=True))
        a = sample_team_size(rng, group, config)
        c = sample_citations(rng, config)
        c = adjust_by_age(scale_by_team(c, a, config), year, config)
        pubs.append(Publication(finalize_citations(c, config), a, year))
    return AuthorProfile(student_id, tuple(pubs), group.label)


def _assignments(config: SynthConfig) -> list[GroupSpec]:
    out = []
    for g in config.groups:
        out.extend([g] * g.count)
    return out


def generate_cohort(config: SynthConfig = SynthConfig(), seed: int = 0, workers: int = 1) -> Cohort:
    groups = _assignments(config)
    width = max(4, len(str(len(groups))))
    streams = np.random.SeedSequence(seed).spawn(len(groups))

    def build(i: int) -> AuthorProfile:
        return generate_student(np.random.default_rng(streams[i]), f"s{i:0{width}d}", groups[i], config)

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            members = list(pool.map(build, range(len(groups))))
    else:
        members = [build(i) for i in range(len(groups))]
    return Cohort(tuple(members), f"synth seed={seed}")
