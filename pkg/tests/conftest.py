"""Shared fixtures plus the acceptance-criteria summary printer."""

from __future__ import annotations

import pytest

from endomaps import Endofunction

ACCEPTANCE_RESULTS: list[tuple[int, str, bool, float, float]] = []


def record_criterion(
    number: int, description: str, passed: bool, elapsed: float, limit: float
) -> None:
    ACCEPTANCE_RESULTS.append((number, description, passed, elapsed, limit))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for number, description, passed, elapsed, limit in sorted(ACCEPTANCE_RESULTS):
        status = "PASS" if passed else "FAIL"
        terminalreporter.write_line(
            f"[criterion {number:2d}] {status}  {elapsed:7.2f}s (limit {limit:g}s)  {description}"
        )


@pytest.fixture(scope="session")
def figure_surrogate() -> Endofunction:
    """A 27-point map with a 6-cycle, a 4-cycle, and 17 tree vertices."""
    images = list(range(1, 28))
    for i in range(1, 6):
        images[i - 1] = i + 1
    images[5] = 1
    for i in range(7, 10):
        images[i - 1] = i + 1
    images[9] = 7
    attachments = {
        11: 1, 12: 11, 13: 11, 14: 2, 15: 14, 16: 3, 17: 16, 18: 16,
        19: 4, 20: 19, 21: 5, 22: 7, 23: 22, 24: 8, 25: 24, 26: 9, 27: 26,
    }
    for vertex, image in attachments.items():
        images[vertex - 1] = image
    return Endofunction(tuple(images))
