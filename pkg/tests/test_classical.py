import pytest
from hypothesis import given

from buchi_games.attractor import is_closed, verify_buchi_strategy
from buchi_games.buchi_fast import solve_fast
from buchi_games.classical import solve_classical
from buchi_games.game_graph import GameGraph, Owner
from buchi_games.oracle import oracle_buchi
from buchi_games.progress_measure import Operator, least_fixpoint
from buchi_games.utils.generators import gen_chain_of_traps

from .strategies import games, random_game


@pytest.mark.parametrize(
    ("fixture", "w1"),
    [("f1", {0}), ("f2", set()), ("f3", {0, 1}), ("f4", {0, 1, 2, 3})],
)
def test_small_games(request: pytest.FixtureRequest, fixture: str, w1: set[int]) -> None:
    g: GameGraph = request.getfixturevalue(fixture)
    result = solve_classical(g)
    assert result.w1 == w1
    assert result.w2 == g.alive_set() - w1


def test_input_graph_is_not_modified(f2: GameGraph) -> None:
    before = f2.copy()
    solve_classical(f2)
    assert f2 == before


def test_losing_region_is_removed_in_one_iteration(f2: GameGraph) -> None:
    stats = solve_classical(f2).stats
    assert stats.num_iterations == 1
    assert stats.iterations[0].removed == 3
    assert stats.iterations[0].stop_level is None


def test_chain_of_traps_needs_an_iteration_per_link() -> None:
    g = gen_chain_of_traps(chain=12, clique=5)
    result = solve_classical(g)
    assert result.stats.num_iterations == 13
    assert len(result.w1) == 5


@given(games())
def test_w2_is_a_player1_trap(g: GameGraph) -> None:
    result = solve_classical(g)
    assert is_closed(g, Owner.PLAYER1, result.w2)
    assert verify_buchi_strategy(g, result.w1, result.strategy1)


def test_agrees_with_oracle_on_seeded_corpus() -> None:
    mismatches = []
    for seed in range(1000):
        g = random_game(seed)
        expected = oracle_buchi(g).w1
        classical = solve_classical(g)
        fast = solve_fast(g)
        lifted = least_fixpoint(g, Operator.LIFT).support(g.vertices())
        if not (classical.w1 == fast.w1 == lifted == expected):
            mismatches.append(seed)
            continue
        for result in (classical, fast):
            assert result.w1 | result.w2 == g.alive_set()
            assert not result.w1 & result.w2
            assert verify_buchi_strategy(g, result.w1, result.strategy1)
    assert mismatches == []
