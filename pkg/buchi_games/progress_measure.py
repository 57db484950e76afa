"""Меры прогресса, операторы Lift/coLift и динамические решатели.

Значение меры — целое из [0, n] или ⊤; ⊤ хранится как n + 1, тогда
inc(k) = min(k + 1, ⊤), а min/max работают без особых случаев.
"""

from __future__ import annotations

import logging
from collections import deque
from collections.abc import Iterable
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .attractor import attractor
from .buchi_fast import solve_fast
from .classical import SolveStats
from .errors import InvariantViolation
from .game_graph import GameGraph, Owner, VertexSet

logger = logging.getLogger(__name__)


class Operator(str, Enum):
    LIFT = "lift"
    COLIFT = "colift"


@dataclass
class ProgressMeasure:
    """Мера прогресса над вершинами графа.

    Атрибуты:
        values: Значение для каждой вершины; ⊤ равно `top`.
        top: Представление ⊤ (n + 1).
    """

    values: list[int]
    top: int

    @classmethod
    def zeros(cls, n: int) -> "ProgressMeasure":
        return cls([0] * n, n + 1)

    def __getitem__(self, v: int) -> int:
        return self.values[v]

    def inc(self, k: int) -> int:
        """k + 1 с насыщением в ⊤."""
        return k + 1 if k < self.top else self.top

    def is_top(self, v: int) -> bool:
        return self.values[v] == self.top

    def support(self, vertices: Iterable[int]) -> VertexSet:
        """Вершины со значением меньше ⊤."""
        return frozenset(v for v in vertices if self.values[v] != self.top)

    def to_numpy(self) -> np.ndarray:
        """Значения меры массивом int64 (⊤ равно `top`)."""
        return np.asarray(self.values, dtype=np.int64)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ProgressMeasure):
            return NotImplemented
        return self.top == other.top and self.values == other.values


def lift_at(g: GameGraph, pm: ProgressMeasure, v: int) -> int:
    """Значение Lift в вершине `v` при мере `pm`."""
    succ = [pm[w] for w in g.successors(v)]
    if g.buchi[v]:
        if g.owner[v] is Owner.PLAYER1:
            return pm.top if all(x == pm.top for x in succ) else 0
        return pm.top if any(x == pm.top for x in succ) else 0
    best = min(succ) if g.owner[v] is Owner.PLAYER1 else max(succ)
    return pm.inc(best)


def colift_at(g: GameGraph, pm: ProgressMeasure, v: int) -> int:
    """Значение coLift в вершине `v` при мере `pm`."""
    succ = [pm[w] for w in g.successors(v)]
    best = min(succ) if g.owner[v] is Owner.PLAYER2 else max(succ)
    return pm.inc(best) if g.buchi[v] else best


_OPERATORS = {Operator.LIFT: lift_at, Operator.COLIFT: colift_at}


def least_fixpoint(
    g: GameGraph, operator: Operator, stats: SolveStats | None = None
) -> ProgressMeasure:
    """Наименьшая неподвижная точка оператора от нулевой меры.

    Хаотичная итерация по очереди: при росте значения вершины в очередь
    ставятся её предшественники. Значения по ходу только растут.

    Аргументы:
        g: Корректный граф.
        operator: `Operator.LIFT` или `Operator.COLIFT`.
        stats: Если задан, к `stats.work` прибавляются просмотры преемников
            при каждом вычислении оператора и просмотры предшественников.

    Возвращает:
        Наименьшую неподвижную точку.
    """
    step = _OPERATORS[Operator(operator)]
    pm = ProgressMeasure.zeros(g.n)
    queue = deque(g.vertices())
    queued = [g.alive[v] for v in range(g.n)]
    work = 0
    while queue:
        v = queue.popleft()
        queued[v] = False
        new = step(g, pm, v)
        work += g.outdeg(v)
        if new == pm.values[v]:
            continue
        pm.values[v] = new
        for u in g.predecessors(v):
            work += 1
            if not queued[u]:
                queued[u] = True
                queue.append(u)
    if stats is not None:
        stats.work += work
    return pm


class _DynamicSolver:
    """Общая часть динамических решателей: очередь, мера, счётчики изменений."""

    def __init__(self, graph: GameGraph) -> None:
        self.graph = graph
        self.pm = ProgressMeasure.zeros(graph.n)
        self.change_counts = [0] * graph.n
        self._witness: list[set[int]] = [set() for _ in range(graph.n)]
        self._queue: deque[int] = deque()
        self._queued = [False] * graph.n

    def witnesses(self, v: int) -> frozenset[int]:
        """Текущий список свидетелей вершины `v`."""
        return frozenset(self._witness[v])

    def _enqueue(self, v: int) -> None:
        if not self._queued[v]:
            self._queued[v] = True
            self._queue.append(v)

    def _raise(self, v: int, value: int) -> None:
        if value <= self.pm.values[v]:
            raise InvariantViolation(
                f"measure of {v} would not increase: {self.pm.values[v]} -> {value}"
            )
        self.pm.values[v] = value
        self.change_counts[v] += 1

    def _run(self) -> None:
        while self._queue:
            x = self._queue.popleft()
            self._queued[x] = False
            self._process(x)

    def _process(self, x: int) -> None:
        raise NotImplementedError


class DecrementalSolver(_DynamicSolver):
    """Поддержка W_1 при удалении рёбер игрока 1 (мера Lift).

    Решатель работает со ссылкой на переданный граф и изменяет его.

    Списки свидетелей: для x ∈ V_1 ∩ B — преемники w с ρ(w) ≠ ⊤; для
    x ∈ V_1 \\ B — преемники w с ρ(x) = ρ(w) + 1. Вершины с ⊤ заморожены:
    после распространения своего ⊤ они больше не обрабатываются.
    """

    def __init__(self, graph: GameGraph) -> None:
        super().__init__(graph)
        g = graph
        top = self.pm.top
        partition = solve_fast(g)
        inner = g.copy()
        inner.remove_vertices(partition.w2)
        ranks = attractor(inner, Owner.PLAYER1, inner.buchi_set()).rank
        for v in g.vertices():
            self.pm.values[v] = ranks[v] if v in partition.w1 else top
        for x in g.vertices():
            if g.owner[x] is Owner.PLAYER1:
                self._witness[x] = self._scan_witnesses(x)
        logger.debug("decremental solver ready: |W1|=%d", len(partition.w1))

    def _scan_witnesses(self, x: int) -> set[int]:
        g, pm = self.graph, self.pm
        if pm.is_top(x):
            return set()
        if g.buchi[x]:
            return {w for w in g.successors(x) if not pm.is_top(w)}
        return {w for w in g.successors(x) if pm.inc(pm[w]) == pm[x]}

    def w1(self) -> VertexSet:
        """Вершины с мерой меньше ⊤."""
        return self.pm.support(self.graph.vertices())

    def delete(self, u: int, v: int) -> VertexSet:
        """Удалить ребро (u, v) игрока 1 и восстановить наименьшую точку Lift.

        Возвращает:
            Новое множество W_1 = {v : ρ(v) ≠ ⊤}.

        Исключения:
            NotPlayer1EdgeError, NoSuchEdgeError, LastOutedgeError,
            UpdateModeError: См. `GameGraph.delete_edge`.
        """
        self.graph.delete_edge(u, v)
        self._witness[u].discard(v)
        if not self.pm.is_top(u):
            self._enqueue(u)
        self._run()
        return self.w1()

    def _process(self, x: int) -> None:
        g, pm = self.graph, self.pm
        if g.owner[x] is Owner.PLAYER1 and not pm.is_top(x):
            if self._witness[x]:
                return
            new = lift_at(g, pm, x)
            self._raise(x, new)
            self._witness[x] = self._scan_witnesses(x)
        self._propagate(x)

    def _propagate(self, x: int) -> None:
        g, pm = self.graph, self.pm
        x_top = pm.is_top(x)
        for u in g.predecessors(x):
            if pm.is_top(u):
                continue
            if g.owner[u] is Owner.PLAYER1:
                if not g.buchi[u]:
                    if pm.inc(pm[x]) != pm[u]:
                        self._witness[u].discard(x)
                    self._enqueue(u)
                elif x_top:
                    self._witness[u].discard(x)
                    if not self._witness[u]:
                        self._raise(u, pm.top)
                        self._enqueue(u)
            elif not g.buchi[u]:
                candidate = pm.inc(pm[x])
                if candidate > pm[u]:
                    self._raise(u, candidate)
                    self._enqueue(u)
            elif x_top:
                self._raise(u, pm.top)
                self._enqueue(u)


class IncrementalSolver(_DynamicSolver):
    """Поддержка W_1 при вставке рёбер игрока 1 (мера coLift).

    Решатель работает со ссылкой на переданный граф и изменяет его.

    Списки свидетелей: для x ∈ V_2 ∩ C — преемники w с ρ(x) = ρ(w); для
    x ∈ V_2 ∩ B — преемники w с ρ(x) = ρ(w) + 1. Начальная мера строится
    тем же процессом: нулевая мера, в очереди все вершины Бюхи.
    """

    def __init__(self, graph: GameGraph) -> None:
        super().__init__(graph)
        g, pm = graph, self.pm
        for x in g.vertices():
            if g.owner[x] is Owner.PLAYER2:
                self._witness[x] = self._scan_witnesses(x)
        for x in g.vertices():
            if not g.buchi[x]:
                continue
            if g.owner[x] is Owner.PLAYER1:
                self._raise(x, colift_at(g, pm, x))
            self._enqueue(x)
        self._run()
        logger.debug("incremental solver ready: |W2|=%d", len(self.w2()))

    def _scan_witnesses(self, x: int) -> set[int]:
        g, pm = self.graph, self.pm
        if pm.is_top(x):
            return set()
        if g.buchi[x]:
            return {w for w in g.successors(x) if pm.inc(pm[w]) == pm[x]}
        return {w for w in g.successors(x) if pm[w] == pm[x]}

    def _is_witness(self, u: int, w: int) -> bool:
        pm = self.pm
        if self.graph.buchi[u]:
            return pm.inc(pm[w]) == pm[u]
        return pm[w] == pm[u]

    def w2(self) -> VertexSet:
        """Вершины с мерой меньше ⊤: выигрыш игрока 2."""
        return self.pm.support(self.graph.vertices())

    def w1(self) -> VertexSet:
        return self.graph.alive_set() - self.w2()

    def insert(self, u: int, v: int) -> VertexSet:
        """Вставить ребро (u, v) игрока 1 и восстановить наименьшую точку coLift.

        Возвращает:
            Новое множество W_1 = V \\ {v : ρ(v) ≠ ⊤}.

        Исключения:
            NotPlayer1EdgeError, EdgeExistsError, UpdateModeError:
                См. `GameGraph.insert_edge`.
        """
        g, pm = self.graph, self.pm
        g.insert_edge(u, v)
        if not pm.is_top(u):
            candidate = pm.inc(pm[v]) if g.buchi[u] else pm[v]
            if candidate > pm[u]:
                self._raise(u, candidate)
                self._enqueue(u)
        self._run()
        return self.w1()

    def _process(self, x: int) -> None:
        g, pm = self.graph, self.pm
        if g.owner[x] is Owner.PLAYER2:
            if self._witness[x]:
                return
            self._raise(x, colift_at(g, pm, x))
            self._witness[x] = self._scan_witnesses(x)
        self._propagate(x)

    def _propagate(self, x: int) -> None:
        g, pm = self.graph, self.pm
        for u in g.predecessors(x):
            if pm.is_top(u):
                continue
            if g.owner[u] is Owner.PLAYER2:
                if not self._is_witness(u, x):
                    self._witness[u].discard(x)
                self._enqueue(u)
            else:
                candidate = pm.inc(pm[x]) if g.buchi[u] else pm[x]
                if candidate > pm[u]:
                    self._raise(u, candidate)
                    self._enqueue(u)


def init_decremental(g: GameGraph) -> DecrementalSolver:
    """Подготовить решатель для последовательности удалений рёбер.

    Аргументы:
        g: Граф; решатель изменяет его при каждом удалении.

    Возвращает:
        `DecrementalSolver` с наименьшей неподвижной точкой Lift для `g`.
    """
    return DecrementalSolver(g)


def dec_delete(s: DecrementalSolver, u: int, v: int) -> VertexSet:
    """Удалить ребро (u, v) игрока 1.

    Аргументы:
        s: Решатель из `init_decremental`.
        u: Источник ребра, вершина игрока 1.
        v: Приёмник ребра.

    Возвращает:
        Новое W_1.
    """
    return s.delete(u, v)


def init_incremental(g: GameGraph) -> IncrementalSolver:
    """Подготовить решатель для последовательности вставок рёбер.

    Аргументы:
        g: Граф; решатель изменяет его при каждой вставке.

    Возвращает:
        `IncrementalSolver` с наименьшей неподвижной точкой coLift для `g`.
    """
    return IncrementalSolver(g)


def inc_insert(s: IncrementalSolver, u: int, v: int) -> VertexSet:
    """Вставить ребро (u, v) игрока 1.

    Аргументы:
        s: Решатель из `init_incremental`.
        u: Источник ребра, вершина игрока 1.
        v: Приёмник ребра.

    Возвращает:
        Новое W_1.
    """
    return s.insert(u, v)
