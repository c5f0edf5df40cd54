import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

from scalecite.model import AuthorProfile, Publication

sys.path.insert(0, str(Path(__file__).parent))


def profiles(max_n=12, max_c=50, max_a=8):
    pub = st.builds(Publication, st.integers(0, max_c), st.integers(1, max_a))
    return st.lists(pub, max_size=max_n).map(lambda ps: AuthorProfile("x", tuple(ps)))


@pytest.fixture
def make_profile():
    def build(pairs, id="x"):
        return AuthorProfile.from_pairs(id, pairs)

    return build


ACCEPTANCE = {}


@pytest.fixture
def record():
    """Store ``(passed, detail)`` for an acceptance criterion."""

    def put(n, passed, detail):
        ACCEPTANCE[n] = (bool(passed), detail)
        return passed

    return put


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        passed, detail = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n}: {'PASS' if passed else 'FAIL'}  {detail}")
