"""Six-candidate hiring case study.

The per-paper data was derived offline by ``tools/fixture_search.py``, an
exhaustive search for (citations, coauthors) assignments that reproduce the
published paper counts, totals, h, g, h_I (2 dp), h_frac and all four SBCI
columns (2 dp). Publication years are unknown.

Structure shared between candidates:

* candidate 2 = candidate 1 + three small-team papers
* candidate 4 = candidate 1 + candidate 3
* candidate 6 = candidate 1 + two small-team papers
* candidate 5 = candidate 6 + one hyper-cited consortium paper
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .classic import (
    ExpFracParams,
    exp_fractional_h_index,
    fractional_h_index,
    g_index,
    h_index,
    individual_h_index,
)
from .model import AuthorProfile, Cohort, validate_cohort
from .sbci import DEFAULT_TAU, SbciParams, partition, sbci

C1_PAPERS = ((20, 3), (16, 2), (5, 2), (4, 2), (1, 2))
C2_EXTRA = ((10, 3), (10, 5), (3, 4))
C3_PAPERS = ((16000, 70), (8000, 569), (4000, 663), (2000, 95), (1000, 873))
C6_EXTRA = ((300, 3), (100, 4))
C5_BLOCKBUSTER = ((16000, 70),)

# any beta in roughly [0.805, 1.151] reproduces the published h_exp column
CASE_STUDY_BETA = 1.0

DEFAULT_SETTINGS = (
    SbciParams(0.6, DEFAULT_TAU, "sqrt", "log1p"),
    SbciParams(0.8, DEFAULT_TAU, "sqrt", "identity"),
    SbciParams(0.8, DEFAULT_TAU, "identity", "log1p"),
    SbciParams(0.8, DEFAULT_TAU, "identity", "identity"),
)

# Published integer columns, plus h_I to two decimals and the SBCI columns.
EXPECTED = {
    "large": (0, 0, 5, 5, 1, 0),
    "small": (5, 8, 0, 5, 7, 7),
    "n_papers": (5, 8, 5, 10, 8, 7),
    "total_citations": (46, 69, 31000, 31046, 16446, 446),
    "h": (4, 5, 5, 7, 5, 5),
    "h_I": (1.78, 1.67, 0.01, 0.02, 0.30, 1.79),
    "h_frac": (2, 3, 4, 6, 5, 4),
    "g": (5, 8, 5, 10, 8, 7),
    "h_exp": (2, 2, 0, 2, 3, 3),
}
EXPECTED_SBCI = {
    "0.6/sqrt(a)/log1p(w)": (1.37, 1.50, 4.73, 6.10, 6.75, 2.22),
    "0.8/sqrt(a)/w": (5.99, 8.34, 2113.70, 2119.69, 1580.52, 50.63),
    "0.8/a/log1p(w)": (0.61, 0.66, 4.48, 5.09, 5.35, 1.00),
    "0.8/a/w": (3.93, 5.15, 216.69, 220.62, 211.79, 28.93),
}
# candidate ids ordered best-first under 0.6/sqrt/log1p
EXPECTED_SBCI_ORDER = ("5", "4", "3", "6", "2", "1")


@dataclass(frozen=True)
class CaseStudyFixture:
    cohort: Cohort
    expected: dict = field(default_factory=lambda: EXPECTED)
    expected_sbci: dict = field(default_factory=lambda: EXPECTED_SBCI)
    beta: float = CASE_STUDY_BETA

    def candidate(self, k: int) -> AuthorProfile:
        return self.cohort.members[k - 1]


def build_case_study_fixture() -> CaseStudyFixture:
    papers = {
        1: C1_PAPERS,
        2: C1_PAPERS + C2_EXTRA,
        3: C3_PAPERS,
        4: C1_PAPERS + C3_PAPERS,
        5: C1_PAPERS + C6_EXTRA + C5_BLOCKBUSTER,
        6: C1_PAPERS + C6_EXTRA,
    }
    members = tuple(AuthorProfile.from_pairs(str(k), papers[k]) for k in range(1, 7))
    return CaseStudyFixture(validate_cohort(Cohort(members, "case study")))


def _multiset(profile: AuthorProfile) -> Counter:
    return Counter((p.citations, p.coauthors) for p in profile.publications)


def structural_violations(fixture: CaseStudyFixture) -> list[str]:
    """Check the subset relations between candidates by multiset inclusion."""
    c = {k: _multiset(fixture.candidate(k)) for k in range(1, 7)}
    small5 = Counter({k: v for k, v in c[5].items() if k[1] < DEFAULT_TAU})
    problems = []
    if c[1] - c[2]:
        problems.append("candidate 2 does not contain all of candidate 1's papers")
    if c[4] != c[1] + c[3]:
        problems.append("candidate 4 is not candidate 1 + candidate 3")
    if c[1] - c[5]:
        problems.append("candidate 5 does not contain all of candidate 1's papers")
    if c[6] != small5:
        problems.append("candidate 6 does not share candidate 5's small-scale papers")
    return problems


def candidate_row(profile: AuthorProfile, beta: float, settings=DEFAULT_SETTINGS) -> dict:
    large, small = partition(profile, DEFAULT_TAU)
    row = {
        "candidate": profile.id,
        "large": len(large),
        "small": len(small),
        "n_papers": profile.n_papers,
        "total_citations": profile.total_citations,
        "h": h_index(profile),
        "h_I": individual_h_index(profile),
        "h_frac": fractional_h_index(profile),
        "g": g_index(profile),
        "h_exp": exp_fractional_h_index(profile, ExpFracParams(beta)),
    }
    for params in settings:
        row[f"SBCI {params.label}"] = sbci(profile, params)
    return row


def mismatches(rows: list[dict]) -> list[str]:
    """Cells that differ from the published tables (h_I and SBCI at 2 dp)."""
    out = []
    for i, row in enumerate(rows):
        for key, values in EXPECTED.items():
            got = row[key]
            want = values[i]
            same = round(got, 2) == want if key == "h_I" else got == want
            if not same:
                out.append(f"candidate {row['candidate']}: {key} = {got}, expected {want}")
        for label, values in EXPECTED_SBCI.items():
            key = f"SBCI {label}"
            if key in row and round(row[key], 2) != values[i]:
                out.append(f"candidate {row['candidate']}: {key} = {row[key]:.4f}, expected {values[i]}")
    return out


def run_case_study(settings=DEFAULT_SETTINGS, beta: float | None = None) -> tuple[list[dict], list[str]]:
    """Recompute every metric for the six candidates.

    Returns the table rows and a list of mismatches against the published
    values (empty when everything reproduces).
    """
    fixture = build_case_study_fixture()
    beta = fixture.beta if beta is None else beta
    rows = [candidate_row(m, beta, settings) for m in fixture.cohort.members]
    return rows, structural_violations(fixture) + mismatches(rows)


def ordering(rows: list[dict], key: str) -> list[str]:
    """Candidate ids sorted best-first by ``key`` (ties by id)."""
    return [r["candidate"] for r in sorted(rows, key=lambda r: (-r[key], r["candidate"]))]
