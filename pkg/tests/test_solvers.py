import pytest
from hypothesis import given

from buchi_games.attractor import verify_buchi_strategy
from buchi_games.game_graph import GameGraph
from buchi_games.solvers import BUCHI_SOLVERS, MEC_SOLVERS, FastSolver

from .strategies import games


def test_registries() -> None:
    assert sorted(BUCHI_SOLVERS) == ["classical", "fast", "pm"]
    assert sorted(MEC_SOLVERS) == ["fast", "naive"]
    assert repr(FastSolver()) == "FastSolver(name='fast')"


@given(games())
def test_buchi_solvers_agree_and_certify(g: GameGraph) -> None:
    results = {name: cls().solve(g) for name, cls in BUCHI_SOLVERS.items()}
    w1 = results["classical"].w1
    for name, result in results.items():
        assert result.w1 == w1, name
        assert result.w2 == g.alive_set() - w1, name
        assert verify_buchi_strategy(g, result.w1, result.strategy1), name


@given(games(max_n=10, max_outdeg=4))
def test_mec_solvers_agree(g: GameGraph) -> None:
    fast, naive = (cls().decompose(g).canonical() for cls in MEC_SOLVERS.values())
    assert fast == naive


@pytest.mark.parametrize("max_level", [1, 2])
def test_fast_solver_level_cap(f2: GameGraph, max_level: int) -> None:
    assert FastSolver(max_level).solve(f2).w1 == frozenset()


def test_pm_solver_reports_fixpoint_work(f4: GameGraph) -> None:
    assert BUCHI_SOLVERS["pm"]().solve(f4).stats.work == 6


@given(games(max_n=8))
def test_pm_solver_work_covers_every_edge(g: GameGraph) -> None:
    stats = BUCHI_SOLVERS["pm"]().solve(g).stats
    m = sum(g.outdeg(v) for v in g.vertices())
    assert stats.work >= m
