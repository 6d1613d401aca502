import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from hxcomb import Family  # noqa: E402
from hxcomb.core import all_k_subsets  # noqa: E402


@st.composite
def families(draw, k=3, min_n=3, max_n=10, max_size=None):
    n = draw(st.integers(min_n, max_n))
    pool = all_k_subsets(n, k)
    limit = len(pool) if max_size is None else min(max_size, len(pool))
    picks = draw(st.lists(st.sampled_from(pool), max_size=limit, unique=True))
    return Family(n, k, picks)


@pytest.fixture
def tmp_family_path(tmp_path):
    return tmp_path / "family.json"


ACCEPTANCE_LINES: list[str] = []


def record_criterion(number: int, title: str, passed: bool, detail: str) -> None:
    ACCEPTANCE_LINES.append(f"[{'PASS' if passed else 'FAIL'}] criterion {number}: {title} -- {detail}")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.write_sep("=", "acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
