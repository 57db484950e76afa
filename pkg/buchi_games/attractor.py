"""Альтернирующий аттрактор, проверка замкнутости и проверка стратегии Бюхи."""

from __future__ import annotations

import logging
from collections import deque
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field

from .errors import StrategyUndefinedError
from .game_graph import EdgeView, GameGraph, Owner, VertexSet

logger = logging.getLogger(__name__)


@dataclass
class AttractorResult:
    """Результат вычисления аттрактора.

    Атрибуты:
        members: Множество вершин аттрактора.
        rank: Ранг каждой вершины аттрактора (0 — цель).
        strategy: Выбранный преемник для вершин притягивающего игрока,
            не являющихся целью; его ранг строго меньше.
        work: Число просмотренных входящих рёбер плюс число целей.
    """

    members: VertexSet
    rank: dict[int, int] = field(default_factory=dict)
    strategy: dict[int, int] = field(default_factory=dict)
    work: int = 0

    def __contains__(self, v: int) -> bool:
        return v in self.members


def attractor(
    g: GameGraph,
    player: Owner,
    targets: Iterable[int],
    view: EdgeView | None = None,
) -> AttractorResult:
    """Вычислить Attr_player(targets) в представлении `view`.

    Обратный обход со счётчиками: вершина игрока `player` притягивается,
    как только притянут один её преемник; вершина соперника — когда
    притянуты все её преемники в `view`. Вершина соперника без рёбер в
    `view` никогда не притягивается по правилу «все преемники».
    Обработка идёт слоями, поэтому ранг совпадает с индуктивным R_i.

    Аргументы:
        g: Граф (источник владельцев вершин).
        player: Притягивающий игрок.
        targets: Целевое множество (живые вершины).
        view: Набор рёбер; по умолчанию — все сохранившиеся рёбра `g`.

    Возвращает:
        `AttractorResult` с рангами, стратегией и счётчиком работы.
    """
    view = g if view is None else view
    rank: dict[int, int] = {}
    strategy: dict[int, int] = {}
    remaining: dict[int, int] = {}
    queue: deque[int] = deque()
    work = 0

    for t in targets:
        if t not in rank:
            rank[t] = 0
            queue.append(t)
            work += 1

    while queue:
        x = queue.popleft()
        r = rank[x] + 1
        for u in view.predecessors(x):
            work += 1
            if u in rank:
                continue
            if g.owner[u] is player:
                rank[u] = r
                strategy[u] = x
                queue.append(u)
            else:
                left = remaining.get(u)
                if left is None:
                    left = view.outdeg(u)
                left -= 1
                remaining[u] = left
                if left == 0:
                    rank[u] = r
                    queue.append(u)

    return AttractorResult(frozenset(rank), rank, strategy, work)


def is_closed(g: GameGraph, player: Owner, s: Iterable[int]) -> bool:
    """Проверить, что `s` замкнуто для игрока `player`.

    Вершины `player` в `s` не имеют рёбер наружу, у вершин соперника в `s`
    есть хотя бы один преемник в `s`.
    """
    members = frozenset(s)
    for v in members:
        if g.owner[v] is player:
            if any(w not in members for w in g.successors(v)):
                return False
        elif not any(w in members for w in g.successors(v)):
            return False
    return True


def verify_buchi_strategy(
    g: GameGraph, w1: Iterable[int], strat: Mapping[int, int]
) -> bool:
    """Проверить сертификат выигрыша игрока 1 на множестве `w1`.

    Сертификат корректен, если `w1` замкнуто для игрока 2, стратегия не
    выводит из `w1`, а ранг (альтернирующее расстояние до B ∩ w1 внутри
    `w1`) строго убывает по выбору игрока 1 и по всем рёбрам игрока 2
    вне B. Тогда любая игра остаётся в `w1` и бесконечно часто посещает B.

    Исключения:
        StrategyUndefinedError: Стратегия не задана в вершине игрока 1 из `w1`.
    """
    members = frozenset(w1)
    for v in sorted(members):
        if g.owner[v] is Owner.PLAYER1 and v not in strat:
            raise StrategyUndefinedError(v)
    if not members:
        return True
    if not is_closed(g, Owner.PLAYER2, members):
        return False

    sub = g.copy()
    sub.remove_vertices(sub.alive_set() - members)
    ranks = attractor(sub, Owner.PLAYER1, sub.buchi_set()).rank

    if not members <= ranks.keys():
        return False
    for v in members:
        if g.buchi[v]:
            if ranks[v] != 0:
                return False
            if g.owner[v] is Owner.PLAYER1 and not sub.has_edge(v, strat[v]):
                return False
            continue
        if g.owner[v] is Owner.PLAYER1:
            w = strat[v]
            if not sub.has_edge(v, w) or ranks[w] >= ranks[v]:
                return False
        elif any(ranks[w] >= ranks[v] for w in g.successors(v)):
            return False
    return True
