"""Классический итеративный алгоритм O(n·m) для игр Бюхи."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

from .attractor import AttractorResult, attractor
from .game_graph import GameGraph, Owner, VertexSet

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class IterationRecord:
    """Одна внешняя итерация решателя.

    Атрибуты:
        alive_before: Число живых вершин в начале итерации.
        removed: Сколько вершин удалено на итерации.
        stop_level: Уровень, на котором остановился внутренний цикл
            (`None` для итераций без иерархии уровней).
        candidate_size: Размер найденного множества-кандидата
            (ловушки Tr^j, разреза S_j или объединения нижних КСС).
    """

    alive_before: int
    removed: int
    stop_level: int | None = None
    candidate_size: int = 0


@dataclass
class SolveStats:
    """Инструментирование прогона: итерации и счётчик элементарной работы."""

    iterations: list[IterationRecord] = field(default_factory=list)
    work: int = 0

    @property
    def num_iterations(self) -> int:
        return len(self.iterations)


@dataclass
class WinningPartition:
    """Разбиение вершин на выигрышные множества игроков.

    Атрибуты:
        w1: Выигрышное множество игрока 1 (цель Бюхи).
        w2: Выигрышное множество игрока 2 (цель ко-Бюхи).
        strategy1: Позиционная стратегия игрока 1 на w1 ∩ V_1.
        stats: Инструментирование прогона.
    """

    w1: VertexSet
    w2: VertexSet
    strategy1: dict[int, int] = field(default_factory=dict)
    stats: SolveStats = field(default_factory=SolveStats)


def player1_certificate(g: GameGraph, reach: AttractorResult) -> dict[int, int]:
    """Достроить стратегию аттрактора до всех вершин игрока 1.

    Вершинам Бюхи аттрактор преемника не выбирает; им достаётся первый
    сохранившийся преемник — в замкнутом для игрока 2 множестве он есть.

    Аргументы:
        g: Граф, в котором живы ровно вершины w1.
        reach: Attr_1(B ∩ w1) в этом графе.
    """
    strategy = dict(reach.strategy)
    for v in g.vertices():
        if g.owner[v] is Owner.PLAYER1 and v not in strategy:
            strategy[v] = next(iter(g.successors(v)))
    return strategy


def solve_classical(g: GameGraph) -> WinningPartition:
    """Решить игру Бюхи классическим алгоритмом.

    На каждой итерации j: R = Attr_1(B^j, G^j), Tr = V^j \\ R,
    W_{j+1} = Attr_2(Tr, G^j); W_{j+1} удаляется. Остановка, когда
    W_{j+1} пусто. Работает на копии, входной граф не изменяется.

    Аргументы:
        g: Корректный игровой граф.

    Возвращает:
        `WinningPartition`; стратегия взята из аттрактора последней итерации.
    """
    work = g.copy()
    stats = SolveStats()
    removed: set[int] = set()

    while True:
        reach = attractor(work, Owner.PLAYER1, work.buchi_set())
        stats.work += reach.work
        trap = work.alive_set() - reach.members
        if not trap:
            break
        lost = attractor(work, Owner.PLAYER2, trap)
        stats.work += lost.work
        stats.iterations.append(
            IterationRecord(
                alive_before=work.num_alive,
                removed=len(lost.members),
                candidate_size=len(trap),
            )
        )
        logger.debug(
            "classical iteration %d: trap=%d, removed=%d, alive=%d",
            len(stats.iterations),
            len(trap),
            len(lost.members),
            work.num_alive,
        )
        work.remove_vertices(lost.members)
        removed |= lost.members

    w1 = work.alive_set()
    logger.info(
        "classical: |W1|=%d, iterations=%d, work=%d",
        len(w1),
        stats.num_iterations,
        stats.work,
    )
    return WinningPartition(
        w1=w1,
        w2=frozenset(removed),
        strategy1=player1_certificate(work, reach),
        stats=stats,
    )
