"""Базовые абстрактные классы решателей с единым интерфейсом."""

from abc import ABC, abstractmethod

from ..classical import WinningPartition
from ..game_graph import GameGraph
from ..mec import MecDecomposition


class BaseSolver(ABC):
    """Базовый класс решателей игр Бюхи.

    Определяет единый интерфейс, через который CLI и бенчмарк вызывают
    любой алгоритм по имени.

    Атрибуты:
        name: Имя алгоритма в CLI и в отчёте бенчмарка.
    """

    name: str = ""

    @abstractmethod
    def solve(self, g: GameGraph) -> WinningPartition:
        """Вычислить выигрышные множества.

        Аргументы:
            g: Игровой граф; не изменяется.

        Возвращает:
            Разбиение на W_1 и W_2 со стратегией игрока 1.
        """

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}(name={self.name!r})"


class BaseMecSolver(ABC):
    """Базовый класс алгоритмов разложения MEC."""

    name: str = ""

    @abstractmethod
    def decompose(self, g: GameGraph) -> MecDecomposition:
        """Вычислить разложение MEC; граф не изменяется."""
