import random

import pytest

from gateswitch.perm_core import CircularSequence

_criteria = []


@pytest.fixture
def criterion(request):
    """Record one acceptance criterion verdict; printed in the terminal summary."""

    def record(label, ok, detail=""):
        _criteria.append((label, bool(ok), detail))
        assert ok, f"{label}: {detail}"

    return record


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for label, ok, detail in _criteria:
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {label}" + (f"  ({detail})" if detail else ""))


def random_sequence(n, rng: random.Random) -> CircularSequence:
    """Uniformly random ascent at each step (not uniform over sequences)."""
    word = list(range(1, n + 1))
    positions = []
    while True:
        ascents = [j for j in range(n - 1) if word[j] < word[j + 1]]
        if not ascents:
            return CircularSequence.from_positions(n, positions)
        j = rng.choice(ascents)
        word[j], word[j + 1] = word[j + 1], word[j]
        positions.append(j + 1)
