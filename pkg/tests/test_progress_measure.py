import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from buchi_games.attractor import attractor
from buchi_games.classical import SolveStats, solve_classical
from buchi_games.errors import EdgeExistsError, LastOutedgeError, NotPlayer1EdgeError
from buchi_games.game_graph import GameGraph, Owner
from buchi_games.oracle import maxvisit_oracle
from buchi_games.progress_measure import (DecrementalSolver, IncrementalSolver, Operator,
                                          ProgressMeasure, colift_at, dec_delete,
                                          inc_insert, init_decremental, init_incremental,
                                          least_fixpoint, lift_at)

from .strategies import games, player1_edges, random_game

P1, P2 = Owner.PLAYER1, Owner.PLAYER2


def _measure(g: GameGraph, values: list[int]) -> ProgressMeasure:
    pm = ProgressMeasure.zeros(g.n)
    pm.values = list(values)
    return pm


def test_inc_saturates_at_top() -> None:
    pm = ProgressMeasure.zeros(3)
    assert pm.top == 4
    assert pm.inc(2) == 3
    assert pm.inc(pm.top) == pm.top


def test_lift_cases(f4: GameGraph) -> None:
    assert lift_at(f4, ProgressMeasure.zeros(4), 1) == 1
    g = GameGraph.build(
        [(P1, True), (P2, False), (P1, False), (P1, False)],
        [(0, 2), (1, 2), (1, 3), (2, 2), (3, 3)],
    )
    pm = _measure(g, [0, 0, 5, 3])
    assert lift_at(g, pm, 0) == pm.top
    assert lift_at(g, pm, 1) == pm.top
    pm.values[2] = 4
    assert lift_at(g, pm, 0) == 0
    assert lift_at(g, pm, 1) == 5


def test_colift_cases(f2: GameGraph) -> None:
    pm = ProgressMeasure.zeros(3)
    assert colift_at(f2, pm, 0) == 1
    assert colift_at(f2, pm, 2) == 0
    g = GameGraph.build(
        [(P2, True), (P1, False), (P1, False)],
        [(0, 1), (0, 2), (1, 1), (2, 2)],
    )
    assert colift_at(g, _measure(g, [0, 0, 4]), 0) == 1


def test_lift_fixpoint_on_chain(f4: GameGraph) -> None:
    assert least_fixpoint(f4, Operator.LIFT).values == [0, 1, 2, 3]


def test_fixpoint_counts_operator_work(f4: GameGraph) -> None:
    stats = SolveStats()
    least_fixpoint(f4, Operator.LIFT, stats)
    # четыре вычисления Lift по одному преемнику и два просмотра предшественников
    assert stats.work == 6


def test_lift_fixpoint_on_losing_game(f2: GameGraph) -> None:
    pm = least_fixpoint(f2, Operator.LIFT)
    assert all(pm.is_top(v) for v in range(3))


def test_colift_fixpoint_on_f2(f2: GameGraph) -> None:
    pm = least_fixpoint(f2, Operator.COLIFT)
    assert pm.values == [1, 0, 0]
    assert maxvisit_oracle(f2, 0) == 1


def test_to_numpy(f4: GameGraph) -> None:
    arr = least_fixpoint(f4, Operator.LIFT).to_numpy()
    assert arr.dtype == np.int64
    assert arr.tolist() == [0, 1, 2, 3]


@given(games(max_n=6), st.data())
def test_operators_are_monotone(g: GameGraph, data: st.DataObject) -> None:
    top = g.n + 1
    low = data.draw(st.lists(st.integers(0, top), min_size=g.n, max_size=g.n))
    bump = data.draw(st.lists(st.integers(0, top), min_size=g.n, max_size=g.n))
    high = [min(top, a + b) for a, b in zip(low, bump)]
    pm_low, pm_high = _measure(g, low), _measure(g, high)
    for v in g.vertices():
        assert lift_at(g, pm_low, v) <= lift_at(g, pm_high, v)
        assert colift_at(g, pm_low, v) <= colift_at(g, pm_high, v)


@given(games())
def test_fixpoints_characterize_winning_sets(g: GameGraph) -> None:
    result = solve_classical(g)
    assert least_fixpoint(g, Operator.LIFT).support(g.vertices()) == result.w1
    assert least_fixpoint(g, Operator.COLIFT).support(g.vertices()) == result.w2


@given(games())
def test_lift_value_is_attractor_rank_inside_w1(g: GameGraph) -> None:
    pm = least_fixpoint(g, Operator.LIFT)
    inner = g.copy()
    inner.remove_vertices(g.alive_set() - pm.support(g.vertices()))
    ranks = attractor(inner, P1, inner.buchi_set()).rank
    for v in inner.vertices():
        assert pm[v] == ranks[v]


@given(games(max_n=6, max_outdeg=2))
def test_colift_value_is_maxvisit(g: GameGraph) -> None:
    pm = least_fixpoint(g, Operator.COLIFT)
    for v in g.vertices():
        assert pm[v] == maxvisit_oracle(g, v)


def test_decremental_init(f1: GameGraph, f2: GameGraph, f4: GameGraph) -> None:
    assert init_decremental(f4).pm.values == [0, 1, 2, 3]
    assert init_decremental(f1).pm.values == [0]
    solver = init_decremental(f2)
    assert all(solver.pm.is_top(v) for v in range(3))
    assert all(not solver.witnesses(v) for v in range(3))


def test_delete_keeps_value_while_a_witness_survives() -> None:
    g = GameGraph.build(
        [(P1, True), (P1, False), (P1, False), (P1, False)],
        [(0, 0), (1, 0), (1, 2), (2, 1), (3, 2)],
    )
    solver = init_decremental(g)
    before = list(solver.pm.values)
    assert dec_delete(solver, 1, 2) == {0, 1, 2, 3}
    assert solver.pm.values == before


def test_delete_drives_vertex_to_top() -> None:
    g = GameGraph.build([(P1, True), (P1, False)], [(0, 1), (1, 0), (1, 1)])
    solver = init_decremental(g)
    assert solver.pm.values == [0, 1]
    assert dec_delete(solver, 1, 0) == frozenset()
    assert solver.pm.values == [3, 3]
    assert solver.change_counts == [1, 2]


def test_delete_errors(f1: GameGraph, f2: GameGraph) -> None:
    with pytest.raises(LastOutedgeError):
        init_decremental(f1).delete(0, 0)
    with pytest.raises(NotPlayer1EdgeError):
        init_decremental(f2).delete(1, 2)


def test_incremental_init(f1: GameGraph, f2: GameGraph, f3: GameGraph) -> None:
    assert init_incremental(f2).pm.values == [1, 0, 0]
    s1 = init_incremental(f1)
    assert s1.pm.is_top(0)
    assert s1.w1() == {0}
    s3 = init_incremental(f3)
    assert s3.w2() == frozenset()


def test_insert_into_player2_trap_changes_nothing(f2: GameGraph) -> None:
    solver = init_incremental(f2)
    assert inc_insert(solver, 0, 2) == frozenset()
    assert solver.w2() == {0, 1, 2}


def test_insert_closes_a_buchi_cycle() -> None:
    g = GameGraph.build([(P1, True), (P1, False)], [(0, 1), (1, 1)])
    solver = init_incremental(g)
    assert inc_insert(solver, 1, 0) == {0, 1}
    assert solver.pm.is_top(0) and solver.pm.is_top(1)


def test_insert_errors(f3: GameGraph) -> None:
    solver = init_incremental(f3)
    with pytest.raises(EdgeExistsError):
        solver.insert(1, 0)
    with pytest.raises(NotPlayer1EdgeError):
        solver.insert(0, 0)


def _deletable(g: GameGraph) -> list[tuple[int, int]]:
    return [(u, v) for u, v in player1_edges(g) if g.outdeg(u) > 1]


@pytest.mark.parametrize("seed", range(100))
def test_decremental_matches_recomputation(seed: int) -> None:
    g = random_game(seed, max_n=40, max_outdeg=5, min_n=5)
    solver = DecrementalSolver(g)
    assert solver.pm == least_fixpoint(g, Operator.LIFT)
    rng = np.random.default_rng(seed)
    while candidates := _deletable(g):
        u, v = candidates[int(rng.integers(len(candidates)))]
        before = list(solver.pm.values)
        w1 = solver.delete(u, v)
        assert w1 == solve_classical(g).w1
        assert solver.pm == least_fixpoint(g, Operator.LIFT)
        assert all(a <= b for a, b in zip(before, solver.pm.values))
    assert max(solver.change_counts) <= g.n + 1


@pytest.mark.parametrize("seed", range(100))
def test_incremental_matches_recomputation(seed: int) -> None:
    full = random_game(seed, max_n=40, max_outdeg=5, min_n=5)
    rng = np.random.default_rng(seed)
    withheld = {
        (u, v) for u, v in player1_edges(full) if full.outdeg(u) > 1 and rng.random() < 0.6
    }
    kept_per_source: dict[int, int] = {}
    edges = []
    held = []
    for u, v in full.edges():
        if (u, v) in withheld and kept_per_source.get(u, 0) >= 1:
            held.append((u, v))
        else:
            edges.append((u, v))
            kept_per_source[u] = kept_per_source.get(u, 0) + 1
    g = GameGraph.build([(full.owner[v], full.buchi[v]) for v in range(full.n)], edges)

    solver = IncrementalSolver(g)
    assert solver.pm == least_fixpoint(g, Operator.COLIFT)
    for k in rng.permutation(len(held)):
        u, v = held[k]
        before = list(solver.pm.values)
        w1 = solver.insert(u, v)
        assert w1 == solve_classical(g).w1
        assert solver.pm == least_fixpoint(g, Operator.COLIFT)
        assert all(a <= b for a, b in zip(before, solver.pm.values))
    assert max(solver.change_counts) <= g.n + 1
