"""Shared data model: publications, author profiles and cohorts.

All types are frozen dataclasses. Construction does not validate so that
ingested data can be inspected before it is accepted; call
:func:`validate_profile` / :func:`validate_cohort` to enforce invariants.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

GROUP_LABELS = ("small-only", "mixed", "large-only")

MIN_YEAR = 1900
MAX_YEAR = 2100


class ValidationError(ValueError):
    """Base class for data-model invariant violations."""


class NegativeCitations(ValidationError):
    pass


class ZeroAuthors(ValidationError):
    pass


class InvalidYear(ValidationError):
    pass


class DuplicateIdsInCohort(ValidationError):
    pass


@dataclass(frozen=True)
class Publication:
    """One paper: citation count, co-author count and (optional) year."""

    citations: int
    coauthors: int
    year: Optional[int] = None  # None means unknown


@dataclass(frozen=True)
class AuthorProfile:
    id: str
    publications: tuple[Publication, ...] = ()
    group: Optional[str] = None

    def __post_init__(self):
        # accept any iterable but always store a tuple
        if not isinstance(self.publications, tuple):
            object.__setattr__(self, "publications", tuple(self.publications))

    @property
    def n_papers(self) -> int:
        return len(self.publications)

    @property
    def citations(self) -> list[int]:
        return [p.citations for p in self.publications]

    @property
    def coauthors(self) -> list[int]:
        return [p.coauthors for p in self.publications]

    @property
    def total_citations(self) -> int:
        return sum(p.citations for p in self.publications)

    @classmethod
    def from_pairs(cls, id: str, pairs: Iterable[tuple], group: Optional[str] = None):
        """Build a profile from ``(citations, coauthors[, year])`` tuples."""
        return cls(id, tuple(Publication(*p) for p in pairs), group)


@dataclass(frozen=True)
class Cohort:
    members: tuple[AuthorProfile, ...] = ()
    provenance: str = ""

    def __post_init__(self):
        if not isinstance(self.members, tuple):
            object.__setattr__(self, "members", tuple(self.members))

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    @property
    def ids(self) -> list[str]:
        return [m.id for m in self.members]

    def get(self, author_id: str) -> AuthorProfile:
        for m in self.members:
            if m.id == author_id:
                return m
        raise KeyError(author_id)


def validate_publication(pub: Publication, where: str = "") -> Publication:
    prefix = f"{where}: " if where else ""
    if pub.citations < 0:
        raise NegativeCitations(f"{prefix}citations must be >= 0, got {pub.citations}")
    if pub.coauthors < 1:
        raise ZeroAuthors(f"{prefix}coauthors must be >= 1, got {pub.coauthors}")
    if pub.year is not None and not MIN_YEAR <= pub.year <= MAX_YEAR:
        raise InvalidYear(f"{prefix}year {pub.year} outside [{MIN_YEAR}, {MAX_YEAR}]")
    return pub


def validate_profile(profile: AuthorProfile) -> AuthorProfile:
    """Return ``profile`` unchanged if every invariant holds, else raise."""
    for i, pub in enumerate(profile.publications):
        validate_publication(pub, f"author {profile.id!r}, paper {i}")
    return profile


def validate_cohort(cohort: Cohort) -> Cohort:
    seen = set()
    for m in cohort.members:
        if m.id in seen:
            raise DuplicateIdsInCohort(f"duplicate author id {m.id!r}")
        seen.add(m.id)
        validate_profile(m)
    return cohort
