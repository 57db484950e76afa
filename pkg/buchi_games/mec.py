"""Разложение на максимальные концевые компоненты (MEC) и машинерия КСС."""

from __future__ import annotations

import logging
from collections import deque
from collections.abc import Iterable
from dataclasses import dataclass, field

from .attractor import attractor
from .buchi_fast import Color, LevelView, num_levels
from .classical import IterationRecord, SolveStats
from .game_graph import EdgeView, GameGraph, Owner, VertexSet

logger = logging.getLogger(__name__)


@dataclass
class MecDecomposition:
    """Попарно непересекающиеся MEC и вершины вне всех MEC.

    Атрибуты:
        mecs: Список MEC в порядке обнаружения.
        non_mec: Вершины, не входящие ни в одну MEC.
        stats: Инструментирование; `candidate_size` итерации — размер
            наименьшей найденной нижней КСС.
    """

    mecs: list[VertexSet] = field(default_factory=list)
    non_mec: VertexSet = frozenset()
    stats: SolveStats = field(default_factory=SolveStats)

    def canonical(self) -> tuple[list[tuple[int, ...]], tuple[int, ...]]:
        """Порядконезависимая форма для сравнения разложений."""
        return sorted(tuple(sorted(c)) for c in self.mecs), tuple(sorted(self.non_mec))


def sccs(vertices: Iterable[int], edges: EdgeView) -> list[VertexSet]:
    """Компоненты сильной связности подграфа, индуцированного `vertices`.

    Итеративный алгоритм Тарьяна: рекурсия заменена явным стеком кадров
    (вершина, итератор её преемников). Компоненты выдаются в обратном
    топологическом порядке (стоки первыми).
    """
    members = set(vertices)
    index: dict[int, int] = {}
    low: dict[int, int] = {}
    on_stack: set[int] = set()
    stack: list[int] = []
    out: list[VertexSet] = []
    counter = 0

    for root in members:
        if root in index:
            continue
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack.add(root)
        frames = [(root, iter(edges.successors(root)))]
        while frames:
            v, it = frames[-1]
            advanced = False
            for w in it:
                if w not in members:
                    continue
                if w not in index:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack.add(w)
                    frames.append((w, iter(edges.successors(w))))
                    advanced = True
                    break
                if w in on_stack:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            frames.pop()
            if frames:
                parent = frames[-1][0]
                low[parent] = min(low[parent], low[v])
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp.append(w)
                    if w == v:
                        break
                out.append(frozenset(comp))
    return out


def bottom_sccs(vertices: Iterable[int], edges: EdgeView) -> list[VertexSet]:
    """Нижние КСС индуцированного подграфа: нет рёбер из компоненты наружу."""
    members = frozenset(vertices)
    bottom = []
    for comp in sccs(members, edges):
        if all(
            w in comp or w not in members
            for v in comp
            for w in edges.successors(v)
        ):
            bottom.append(comp)
    return bottom


def is_end_component(g: GameGraph, u: Iterable[int]) -> bool:
    """Условия концевой компоненты: сильная связность, замкнутость для игрока 2, размер."""
    members = frozenset(u)
    if not members:
        return False
    if len(members) == 1:
        (v,) = members
        if not g.has_edge(v, v):
            return False
    for v in members:
        if g.owner[v] is Owner.PLAYER2 and any(
            w not in members for w in g.successors(v)
        ):
            return False
    return len(sccs(members, g)) == 1


def mec_level_view(g: GameGraph, i: int) -> LevelView:
    """Построить G_i для разложения MEC.

    E_i — рёбра из вершин со степенью не больше 2^i (без окна входящих
    рёбер); синие — все вершины со степенью больше 2^i, независимо от
    владельца.
    """
    view = LevelView(g, i)
    cap = 1 << i
    for u in list(view.vertices()):
        if g.outdeg(u) > cap:
            view._color[u] = Color.BLUE
            continue
        view._color[u] = Color.WHITE
        for v in g.successors(u):
            view._add(u, v)
            view.work += 1
    return view


def _backward_reachable(view: LevelView, sources: Iterable[int]) -> set[int]:
    seen = set(sources)
    queue = deque(seen)
    while queue:
        x = queue.popleft()
        for u in view.predecessors(x):
            view.work += 1
            if u not in seen:
                seen.add(u)
                queue.append(u)
    return seen


def _emit(
    work: GameGraph,
    result: MecDecomposition,
    found: list[VertexSet],
    non_mec: set[int],
    stats: SolveStats,
    level: int | None,
) -> None:
    x = frozenset().union(*found)
    lost = attractor(work, Owner.PLAYER2, x)
    stats.work += lost.work
    stats.iterations.append(
        IterationRecord(
            alive_before=work.num_alive,
            removed=len(lost.members),
            stop_level=level,
            candidate_size=min(len(c) for c in found),
        )
    )
    result.mecs.extend(found)
    non_mec |= lost.members - x
    work.remove_vertices(lost.members)


def mec_decomposition(g: GameGraph) -> MecDecomposition:
    """Разложение MEC за O(n²).

    Шаг 1: все нижние КСС полного графа — MEC; удаляется их Attr_2.
    Далее для i = 1, 2, ...: S = вершины, из которых в G_i не достичь
    синих; при непустом S нижние КСС подграфа G_i[S] — MEC, удаляется
    Attr_2 их объединения в полном графе. Работает на копии.
    """
    work = g.copy()
    result = MecDecomposition()
    stats = result.stats
    non_mec: set[int] = set()

    if work.num_alive:
        _emit(work, result, bottom_sccs(work.vertices(), work), non_mec, stats, None)

    top = num_levels(g.n)
    while work.num_alive:
        alive = work.alive_set()
        for i in range(1, top + 1):
            view = mec_level_view(work, i)
            reach = _backward_reachable(view, view.colored(Color.BLUE))
            stats.work += view.work
            s = alive - reach
            if s:
                break
        found = bottom_sccs(s, view)
        logger.debug(
            "mec iteration: level=%d, |S|=%d, bottom sccs=%d", i, len(s), len(found)
        )
        _emit(work, result, found, non_mec, stats, i)

    result.non_mec = frozenset(non_mec)
    logger.info(
        "mec: %d components, %d non-mec vertices, work=%d",
        len(result.mecs),
        len(result.non_mec),
        stats.work,
    )
    return result


def naive_mec(g: GameGraph) -> MecDecomposition:
    """Базовое разложение MEC через КСС и удаление аттракторов игрока 2.

    Повторять до опустошения графа: для каждой КСС C текущего графа найти
    U — вершины игрока 2 из C с рёбрами наружу. Если U пусто и C
    удовлетворяет условию размера, C — MEC и удаляется Attr_2(C); если U
    непусто, удаляется Attr_2(U) ∩ C. Тривиальная КСС без петли не
    является MEC: удаляется Attr_2 от неё самой.
    """
    work = g.copy()
    result = MecDecomposition()
    stats = result.stats
    non_mec: set[int] = set()

    while work.num_alive:
        alive_before = work.num_alive
        for comp in sccs(work.vertices(), work):
            if not all(work.alive[v] for v in comp):
                continue
            exits = {
                v
                for v in comp
                if work.owner[v] is Owner.PLAYER2
                and any(w not in comp for w in work.successors(v))
            }
            if exits:
                lost = attractor(work, Owner.PLAYER2, exits)
                gone = lost.members & comp
                non_mec |= gone
            else:
                lost = attractor(work, Owner.PLAYER2, comp)
                gone = lost.members
                if is_end_component(work, comp):
                    result.mecs.append(comp)
                    non_mec |= gone - comp
                else:
                    non_mec |= gone
            stats.work += lost.work
            work.remove_vertices(gone)
        stats.iterations.append(
            IterationRecord(
                alive_before=alive_before, removed=alive_before - work.num_alive
            )
        )

    result.non_mec = frozenset(non_mec)
    return result
