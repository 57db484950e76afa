"""Решатель Бюхи за O(n²): иерархия разреженных графов G_i и разделяющие разрезы."""

from __future__ import annotations

import logging
import math
from collections.abc import Iterable, Iterator
from enum import Enum

from .attractor import attractor
from .classical import (IterationRecord, SolveStats, WinningPartition,
                        player1_certificate)
from .game_graph import GameGraph, Owner, VertexSet

logger = logging.getLogger(__name__)


class Color(str, Enum):
    WHITE = "white"
    BLUE = "blue"
    ORANGE = "orange"


def num_levels(n: int) -> int:
    """L = ceil(log2(max(2, n))): при 2^L ≥ n граф G_L совпадает с полным."""
    return math.ceil(math.log2(max(2, n)))


class LevelView:
    """Граф уровня G_i: подмножество рёбер E_i и раскраска вершин.

    Представление строится по текущему (после удалений) графу и хранит
    явные списки преемников и предшественников для живых вершин.

    Атрибуты:
        level: Номер уровня i.
        work: Число рёбер, просмотренных при построении.
    """

    def __init__(self, g: GameGraph, level: int) -> None:
        self.graph = g
        self.level = level
        self.work = 0
        self._color: dict[int, Color] = {}
        self._succ: dict[int, list[int]] = {v: [] for v in g.vertices()}
        self._pred: dict[int, list[int]] = {v: [] for v in self._succ}
        self._edges: set[tuple[int, int]] = set()

    def _add(self, u: int, v: int) -> None:
        self._edges.add((u, v))
        self._succ[u].append(v)
        self._pred[v].append(u)

    def vertices(self) -> Iterator[int]:
        return iter(self._succ)

    def successors(self, v: int) -> list[int]:
        return self._succ[v]

    def predecessors(self, v: int) -> list[int]:
        return self._pred[v]

    def outdeg(self, v: int) -> int:
        return len(self._succ[v])

    def has_edge(self, u: int, v: int) -> bool:
        return (u, v) in self._edges

    def color(self, v: int) -> Color:
        return self._color[v]

    def colored(self, color: Color) -> VertexSet:
        return frozenset(v for v, c in self._color.items() if c is color)

    @property
    def num_edges(self) -> int:
        return len(self._edges)


def build_level_view(g: GameGraph, i: int) -> LevelView:
    """Построить G_i для решателя Бюхи.

    Ребро (u, v) входит в E_i, если outdeg(u) ≤ 2^i или u — среди первых
    2^i сохранившихся входящих рёбер v. Вершина игрока 1 со степенью больше
    2^i синяя, такая же вершина игрока 2 — оранжевая, остальные белые.
    Стоимость построения O(2^i · n).

    Аргументы:
        g: Текущий граф.
        i: Уровень, 1 ≤ i ≤ L.

    Возвращает:
        `LevelView` уровня `i`.
    """
    view = LevelView(g, i)
    cap = 1 << i
    for u in view.vertices():
        if g.outdeg(u) <= cap:
            view._color[u] = Color.WHITE
        elif g.owner[u] is Owner.PLAYER1:
            view._color[u] = Color.BLUE
        else:
            view._color[u] = Color.ORANGE

    for u in view.vertices():
        if view._color[u] is Color.WHITE:
            for v in g.successors(u):
                view._add(u, v)
                view.work += 1
    for v in list(view.vertices()):
        for u in g.first_inedges(v, cap):
            view.work += 1
            if view._color[u] is not Color.WHITE:
                view._add(u, v)
    return view


def is_separating_cut(g: GameGraph, view: LevelView, s: Iterable[int]) -> bool:
    """Проверить, что `s` задаёт разделяющий разрез на уровне `view`.

    Условия: (a) рёбра из `s` наружу есть только у вершин игрока 2;
    (b) у каждой вершины игрока 2 из `s` есть ребро внутрь `s`;
    (c) все вершины игрока 1 из `s` белые; (d) в `s` нет вершин Бюхи.
    """
    members = frozenset(s)
    for v in members:
        if g.buchi[v]:
            return False
        succ = view.successors(v)
        if g.owner[v] is Owner.PLAYER1:
            if view.color(v) is not Color.WHITE:
                return False
            if any(w not in members for w in succ):
                return False
        elif not any(w in members for w in succ):
            return False
    return True


def find_candidate_set(
    g: GameGraph, max_level: int | None = None, stats: SolveStats | None = None
) -> tuple[VertexSet, int]:
    """Найти множество S_j для очередной внешней итерации.

    Для i = 1, 2, ...: Z = {оранжевые без рёбер в G_i} ∪ {синие},
    Y = Attr_1(B ∪ Z, G_i), S = V \\ Y. Цикл останавливается, когда S
    непусто или i = L (тело при i = L выполняется).

    Аргументы:
        g: Текущий граф внешней итерации.
        max_level: Необязательный верхний предел перебора малых уровней;
            после него сразу проверяется уровень L.
        stats: Куда добавить счётчик работы.

    Возвращает:
        Пару (S, уровень остановки).
    """
    top = num_levels(g.n)
    levels: Iterable[int] = range(1, top + 1)
    if max_level is not None and max_level < top:
        levels = [*range(1, max(1, max_level) + 1), top]

    alive = g.alive_set()
    buchi = g.buchi_set()
    s: VertexSet = frozenset()
    i = 1
    for i in levels:
        view = build_level_view(g, i)
        z = {
            v
            for v in view.vertices()
            if view.color(v) is Color.BLUE
            or (view.color(v) is Color.ORANGE and view.outdeg(v) == 0)
        }
        reach = attractor(g, Owner.PLAYER1, buchi | z, view)
        if stats is not None:
            stats.work += view.work + reach.work
        s = alive - reach.members
        if s:
            break
    return s, i


def solve_fast(g: GameGraph, max_level: int | None = None) -> WinningPartition:
    """Решить игру Бюхи за O(n²).

    Шаг 1: Y_0 = Attr_1(B, G), D_0 = Attr_2(V \\ Y_0, G). Далее, пока
    `find_candidate_set` возвращает непустое S, удаляется Attr_2(S) в
    полном текущем графе. Оставшиеся вершины — выигрыш игрока 1.
    Работает на копии.

    Аргументы:
        g: Корректный игровой граф.
        max_level: См. `find_candidate_set`.

    Возвращает:
        `WinningPartition` с инструментированием по итерациям.
    """
    work = g.copy()
    stats = SolveStats()
    removed: set[int] = set()

    reach = attractor(work, Owner.PLAYER1, work.buchi_set())
    stats.work += reach.work
    lost = attractor(work, Owner.PLAYER2, work.alive_set() - reach.members)
    stats.work += lost.work
    if lost.members:
        stats.iterations.append(
            IterationRecord(
                alive_before=work.num_alive,
                removed=len(lost.members),
                candidate_size=work.num_alive - len(reach.members),
            )
        )
        work.remove_vertices(lost.members)
        removed |= lost.members

    while work.num_alive:
        s, level = find_candidate_set(work, max_level, stats)
        if not s:
            break
        lost = attractor(work, Owner.PLAYER2, s)
        stats.work += lost.work
        stats.iterations.append(
            IterationRecord(
                alive_before=work.num_alive,
                removed=len(lost.members),
                stop_level=level,
                candidate_size=len(s),
            )
        )
        logger.debug(
            "fast iteration %d: level=%d, |S|=%d, removed=%d",
            len(stats.iterations),
            level,
            len(s),
            len(lost.members),
        )
        work.remove_vertices(lost.members)
        removed |= lost.members

    reach = attractor(work, Owner.PLAYER1, work.buchi_set())
    w1 = work.alive_set()
    logger.info(
        "fast: |W1|=%d, iterations=%d, work=%d",
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
