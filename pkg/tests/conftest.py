import time

import pytest
from hypothesis import strategies as st

from rgfaudit.core import as_word


@st.composite
def rgfs(draw, min_size=1, max_size=10):
    """Random restricted growth function."""
    n = draw(st.integers(min_size, max_size))
    w = [1]
    for _ in range(n - 1):
        w.append(draw(st.integers(1, max(w) + 1)))
    return as_word(w)


@pytest.fixture
def rgf_strategy():
    return rgfs


_START = time.monotonic()
SUITE_BUDGET = 20 * 60


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if not RESULTS:
        return
    elapsed = time.monotonic() - _START
    tr = terminalreporter
    tr.section("acceptance criteria")
    for num in range(1, 9):
        if num not in RESULTS:
            tr.write_line(f"criterion {num}: NOT RUN")
            continue
        ok, detail = RESULTS[num]
        if num == 8:
            ok = ok and elapsed <= SUITE_BUDGET
            detail = f"{detail}; session took {elapsed:.0f}s (budget {SUITE_BUDGET}s)"
        tr.write_line(f"criterion {num}: {'PASS' if ok else 'FAIL'}  {detail}")
