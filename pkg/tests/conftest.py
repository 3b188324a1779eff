import pytest
from hypothesis import settings, strategies as st

from powercmp.game import Game
from powercmp.instances import X3CInstance

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

_acceptance_lines: list[str] = []


@pytest.fixture
def report():
    """Record a one-line PASS/FAIL summary for an acceptance criterion."""

    def record(criterion: str, ok: bool, detail: str = "") -> None:
        _acceptance_lines.append(f"{'PASS' if ok else 'FAIL'}  {criterion}" + (f"  [{detail}]" if detail else ""))

    return record


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)


@st.composite
def games(draw, min_players=1, max_players=7, max_weight=20):
    n = draw(st.integers(min_players, max_players))
    weights = draw(st.lists(st.integers(0, max_weight), min_size=n, max_size=n))
    quota = draw(st.integers(0, sum(weights)))
    return Game(tuple(weights), quota)


@st.composite
def x3c_instances(draw, max_k=3, max_m=6):
    k = draw(st.integers(0, max_k))
    if k == 0:
        return X3CInstance(0, ())
    triple = st.lists(st.integers(0, 3 * k - 1), min_size=3, max_size=3, unique=True)
    sets = draw(st.lists(triple, max_size=max_m))
    return X3CInstance.from_sets(3 * k, sets)
