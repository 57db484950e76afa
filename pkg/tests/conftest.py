"""Общие фикстуры: маленькие графы из примеров и флаг --runslow."""

import pytest
from hypothesis import HealthCheck, settings

from buchi_games.game_graph import GameGraph, Owner

P1, P2 = Owner.PLAYER1, Owner.PLAYER2

settings.register_profile(
    "oracles", deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("oracles")


def pytest_addoption(parser: pytest.Parser) -> None:
    parser.addoption(
        "--runslow", action="store_true", default=False, help="run slow scaling checks"
    )


def pytest_collection_modifyitems(config: pytest.Config, items: list[pytest.Item]) -> None:
    if config.getoption("--runslow"):
        return
    skip_slow = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture
def f1() -> GameGraph:
    """Одна вершина игрока 1 с отметкой Бюхи и петлёй."""
    return GameGraph.build([(P1, True)], [(0, 0)])


@pytest.fixture
def f2() -> GameGraph:
    """b=0 (P1, Бюхи) → u=1 (P2) → {b, c=2}; c (P2) — ловушка с петлёй."""
    return GameGraph.build(
        [(P1, True), (P2, False), (P2, False)],
        [(0, 1), (1, 0), (1, 2), (2, 2)],
    )


@pytest.fixture
def f3() -> GameGraph:
    """Двухвершинный цикл: 0 (P2, Бюхи) ↔ 1 (P1)."""
    return GameGraph.build([(P2, True), (P1, False)], [(0, 1), (1, 0)])


@pytest.fixture
def f4() -> GameGraph:
    """Цепочка игрока 1: v3 → v2 → v1 → v0, v0 — вершина Бюхи с петлёй."""
    return GameGraph.build(
        [(P1, True), (P1, False), (P1, False), (P1, False)],
        [(0, 0), (1, 0), (2, 1), (3, 2)],
    )


@pytest.fixture
def f5() -> GameGraph:
    """a=0, b=1 (P2) с циклом a ↔ b и ребром a → c; c=2 (P1) с петлёй."""
    return GameGraph.build(
        [(P2, False), (P2, False), (P1, False)],
        [(0, 1), (1, 0), (0, 2), (2, 2)],
    )
