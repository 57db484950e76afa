import pytest
from hypothesis import given
from hypothesis import strategies as st

from buchi_games.attractor import attractor, is_closed, verify_buchi_strategy
from buchi_games.errors import StrategyUndefinedError
from buchi_games.game_graph import GameGraph, Owner

from .strategies import games


def _naive_attractor(g: GameGraph, player: Owner, targets: set[int]) -> dict[int, int]:
    """Ранги по определению: R_{k+1} = R_k ∪ CPre(R_k)."""
    rank = {t: 0 for t in targets}
    k = 0
    while True:
        k += 1
        layer = {
            v
            for v in g.vertices()
            if v not in rank
            and (
                any(w in rank for w in g.successors(v))
                if g.owner[v] is player
                else all(w in rank for w in g.successors(v))
            )
        }
        if not layer:
            return rank
        rank.update(dict.fromkeys(layer, k))


def test_player2_attractor_on_f2(f2: GameGraph) -> None:
    result = attractor(f2, Owner.PLAYER2, {2})
    assert result.members == {0, 1, 2}
    assert result.rank == {2: 0, 1: 1, 0: 2}
    assert result.strategy == {1: 2}


def test_player1_attractor_of_empty_set(f2: GameGraph) -> None:
    result = attractor(f2, Owner.PLAYER1, set())
    assert result.members == frozenset()
    assert result.work == 0


def test_closed_sets_on_f2(f2: GameGraph) -> None:
    assert is_closed(f2, Owner.PLAYER1, {2})
    assert not is_closed(f2, Owner.PLAYER1, {0})


def test_verify_self_loop(f1: GameGraph) -> None:
    assert verify_buchi_strategy(f1, {0}, {0: 0})


def test_verify_two_cycle(f3: GameGraph) -> None:
    assert verify_buchi_strategy(f3, {0, 1}, {1: 0})


def test_verify_rejects_losing_region(f2: GameGraph) -> None:
    assert not verify_buchi_strategy(f2, {0, 1, 2}, {0: 1})


def test_verify_requires_strategy_on_player1_vertices(f3: GameGraph) -> None:
    with pytest.raises(StrategyUndefinedError) as exc:
        verify_buchi_strategy(f3, {0, 1}, {})
    assert exc.value.v == 1


def test_verify_empty_region(f2: GameGraph) -> None:
    assert verify_buchi_strategy(f2, set(), {})


def test_verify_rejects_strategy_leaving_region(f4: GameGraph) -> None:
    f4.insert_edge(1, 3)
    assert verify_buchi_strategy(f4, {0, 1, 2, 3}, {0: 0, 1: 0, 2: 1, 3: 2})
    assert not verify_buchi_strategy(f4, {0, 1}, {0: 0, 1: 3})


@given(games(), st.sampled_from([Owner.PLAYER1, Owner.PLAYER2]), st.data())
def test_attractor_matches_inductive_definition(
    g: GameGraph, player: Owner, data: st.DataObject
) -> None:
    targets = data.draw(st.sets(st.sampled_from(sorted(g.vertices()))))
    result = attractor(g, player, targets)
    assert result.rank == _naive_attractor(g, player, set(targets))
    for v, w in result.strategy.items():
        assert g.has_edge(v, w)
        assert result.rank[w] < result.rank[v]


@given(games(), st.sampled_from([Owner.PLAYER1, Owner.PLAYER2]), st.data())
def test_attractor_complement_is_closed_for_attracting_player(
    g: GameGraph, player: Owner, data: st.DataObject
) -> None:
    targets = data.draw(st.sets(st.sampled_from(sorted(g.vertices()))))
    rest = g.alive_set() - attractor(g, player, targets).members
    assert is_closed(g, player, rest)
