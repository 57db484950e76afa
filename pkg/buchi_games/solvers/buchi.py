"""Решатели игр Бюхи: классический, O(n²) и через меру прогресса."""

from ..buchi_fast import solve_fast
from ..classical import SolveStats, WinningPartition, solve_classical
from ..game_graph import GameGraph, Owner
from ..progress_measure import Operator, least_fixpoint
from .base import BaseSolver


class ClassicalSolver(BaseSolver):
    """Обертка для классического алгоритма O(n·m)."""

    name = "classical"

    def solve(self, g: GameGraph) -> WinningPartition:
        return solve_classical(g)


class FastSolver(BaseSolver):
    """Обертка для алгоритма O(n²) с иерархией уровней.

    Аргументы:
        max_level: Необязательный предел перебора малых уровней.
    """

    name = "fast"

    def __init__(self, max_level: int | None = None) -> None:
        self.max_level = max_level

    def solve(self, g: GameGraph) -> WinningPartition:
        return solve_fast(g, self.max_level)


class ProgressMeasureSolver(BaseSolver):
    """W_1 как носитель наименьшей неподвижной точки Lift.

    Стратегия: вершина игрока 1 вне B идёт в преемника с наименьшей мерой,
    вершина Бюхи — в любого преемника с мерой меньше ⊤.
    """

    name = "pm"

    def solve(self, g: GameGraph) -> WinningPartition:
        stats = SolveStats()
        pm = least_fixpoint(g, Operator.LIFT, stats)
        w1 = pm.support(g.vertices())
        strategy = {
            v: min(g.successors(v), key=pm.__getitem__)
            for v in w1
            if g.owner[v] is Owner.PLAYER1
        }
        return WinningPartition(
            w1=w1,
            w2=g.alive_set() - w1,
            strategy1=strategy,
            stats=stats,
        )
