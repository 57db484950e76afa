"""Алгоритмы разложения MEC."""

from ..game_graph import GameGraph
from ..mec import MecDecomposition, mec_decomposition, naive_mec
from .base import BaseMecSolver


class FastMecSolver(BaseMecSolver):
    """Разложение MEC за O(n²) по нижним КСС графов уровней."""

    name = "fast"

    def decompose(self, g: GameGraph) -> MecDecomposition:
        return mec_decomposition(g)


class NaiveMecSolver(BaseMecSolver):
    """Базовое разложение через КСС и аттракторы игрока 2."""

    name = "naive"

    def decompose(self, g: GameGraph) -> MecDecomposition:
        return naive_mec(g)
