"""Изменяемый игровой граф с фиксированным порядком входящих рёбер."""

from __future__ import annotations

import logging
from collections.abc import Iterable, Iterator, Sequence
from enum import Enum, IntEnum
from itertools import islice
from typing import Protocol

from .errors import (AlreadyDeadError, DuplicateEdgeError, EdgeExistsError,
                     InvalidVertexError, LastOutedgeError, NoSuchEdgeError,
                     NotPlayer1EdgeError, UpdateModeError, ZeroOutdegreeError)

logger = logging.getLogger(__name__)

VertexSet = frozenset[int]


class Owner(IntEnum):
    """Владелец вершины."""

    PLAYER1 = 1
    PLAYER2 = 2

    @property
    def opponent(self) -> "Owner":
        return Owner.PLAYER2 if self is Owner.PLAYER1 else Owner.PLAYER1


class UpdateMode(str, Enum):
    """Направление последовательности обновлений рёбер графа."""

    NONE = "none"
    DECREMENTAL = "decremental"
    INCREMENTAL = "incremental"


class EdgeView(Protocol):
    """Набор рёбер над живыми вершинами графа (полный граф или уровень G_i)."""

    def vertices(self) -> Iterable[int]: ...

    def successors(self, v: int) -> Iterable[int]: ...

    def predecessors(self, v: int) -> Iterable[int]: ...

    def outdeg(self, v: int) -> int: ...


class GameGraph:
    """Игровой граф двух игроков с отметкой Бюхи.

    Списки смежности хранятся в словарях `dict[int, None]`: они сохраняют
    порядок вставки и удаляют элемент за O(1), поэтому удаление ребра не
    меняет относительный порядок оставшихся рёбер, а обход никогда не
    проходит по удалённым элементам.

    Порядок входящих рёбер каждой вершины фиксируется при построении:
    сначала рёбра из вершин игрока 2 без отметки Бюхи (приоритет 1), затем
    все остальные; внутри группы — порядок из входных данных.

    Атрибуты:
        n: Число вершин (включая удалённые).
        owner: Владелец каждой вершины.
        buchi: Отметка Бюхи каждой вершины.
        alive: Флаг «вершина не удалена».
        update_mode: Направление уже применённых обновлений рёбер.
    """

    def __init__(self, owner: Sequence[Owner], buchi: Sequence[bool]) -> None:
        if len(owner) != len(buchi):
            raise ValueError("owner and buchi must have the same length")
        self.n = len(owner)
        self.owner: list[Owner] = [Owner(o) for o in owner]
        self.buchi: list[bool] = [bool(b) for b in buchi]
        self.alive: list[bool] = [True] * self.n
        self.update_mode = UpdateMode.NONE
        self._out: list[dict[int, None]] = [{} for _ in range(self.n)]
        self._in: list[dict[int, None]] = [{} for _ in range(self.n)]
        self._seq: dict[tuple[int, int], int] = {}
        self._next_seq = 0
        self._num_alive = self.n

    @classmethod
    def build(
        cls,
        vertices: Sequence[tuple[Owner, bool]],
        edges: Sequence[tuple[int, int]],
    ) -> "GameGraph":
        """Построить граф по списку вершин и рёбер.

        Аргументы:
            vertices: Пары (владелец, отметка Бюхи) в порядке идентификаторов.
            edges: Рёбра (u, v); их порядок задаёт порядок внутри групп
                входящих рёбер.

        Возвращает:
            Новый граф, все вершины которого живы.

        Исключения:
            InvalidVertexError: Конец ребра вне диапазона [0, n).
            DuplicateEdgeError: Ребро встречается повторно.
            ZeroOutdegreeError: У вершины нет исходящих рёбер.
        """
        g = cls([o for o, _ in vertices], [b for _, b in vertices])
        for u, v in edges:
            g._check_id(u)
            g._check_id(v)
            if v in g._out[u]:
                raise DuplicateEdgeError(u, v)
            g._out[u][v] = None
            g._seq[(u, v)] = g._next_seq
            g._next_seq += 1

        first: list[list[int]] = [[] for _ in range(g.n)]
        rest: list[list[int]] = [[] for _ in range(g.n)]
        for u, v in edges:
            (first if g.is_priority1_player2(u) else rest)[v].append(u)
        for v in range(g.n):
            g._in[v] = dict.fromkeys(first[v] + rest[v])

        for v in range(g.n):
            if not g._out[v]:
                raise ZeroOutdegreeError(v)
        logger.debug("Built game graph: n=%d, m=%d", g.n, len(edges))
        return g

    def _check_id(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise InvalidVertexError(v, self.n)

    def is_priority1_player2(self, v: int) -> bool:
        """Вершина игрока 2 без отметки Бюхи: её рёбра идут первыми во входящих списках."""
        return self.owner[v] is Owner.PLAYER2 and not self.buchi[v]

    # --- чтение -----------------------------------------------------------

    def vertices(self) -> Iterator[int]:
        """Живые вершины в порядке возрастания идентификаторов."""
        return (v for v in range(self.n) if self.alive[v])

    def alive_set(self) -> VertexSet:
        """Множество живых вершин."""
        return frozenset(self.vertices())

    @property
    def num_alive(self) -> int:
        """Число живых вершин; поддерживается за O(1)."""
        return self._num_alive

    @property
    def num_edges(self) -> int:
        """Число сохранившихся рёбер."""
        return len(self._seq)

    def successors(self, v: int) -> Iterable[int]:
        """Живое представление преемников `v` без копирования.

        Аргументы:
            v: Идентификатор вершины.

        Возвращает:
            Преемники в порядке вставки рёбер; меняется вместе с графом.
        """
        return self._out[v].keys()

    def predecessors(self, v: int) -> Iterable[int]:
        """Живое представление предшественников `v` в фиксированном порядке входящих рёбер."""
        return self._in[v].keys()

    def out(self, v: int) -> list[int]:
        """Копия списка преемников `v`."""
        return list(self._out[v])

    def inlist(self, v: int) -> list[int]:
        """Копия списка предшественников `v`.

        После удалений это подпоследовательность списка, зафиксированного
        при построении; вставленные рёбра дописываются в конец.

        Аргументы:
            v: Идентификатор вершины.

        Возвращает:
            Источники входящих рёбер `v` в текущем порядке.
        """
        return list(self._in[v])

    def first_inedges(self, v: int, k: int) -> Iterator[int]:
        """Первые `k` сохранившихся входящих рёбер вершины в фиксированном порядке."""
        return islice(self._in[v], k)

    def outdeg(self, v: int) -> int:
        """Текущая исходящая степень `v`."""
        return len(self._out[v])

    cur_outdeg = outdeg

    def cur_indeg(self, v: int) -> int:
        """Текущая входящая степень `v`."""
        return len(self._in[v])

    def has_edge(self, u: int, v: int) -> bool:
        """Есть ли сейчас ребро (u, v)."""
        return v in self._out[u]

    def edges(self) -> list[tuple[int, int]]:
        """Сохранившиеся рёбра в порядке их появления (построение, затем вставки)."""
        return sorted(self._seq, key=self._seq.__getitem__)

    def buchi_set(self) -> VertexSet:
        """Живые вершины с отметкой Бюхи."""
        return frozenset(v for v in self.vertices() if self.buchi[v])

    def owned_by(self, player: Owner) -> VertexSet:
        """Живые вершины игрока `player`.

        Аргументы:
            player: Владелец.

        Возвращает:
            Множество живых вершин этого игрока.
        """
        return frozenset(v for v in self.vertices() if self.owner[v] is player)

    # --- изменение --------------------------------------------------------

    def remove_vertices(self, s: Iterable[int]) -> None:
        """Удалить вершины и все инцидентные им рёбра.

        Рёбра вырезаются из обоих направлений; порядок оставшихся входящих
        рёбер не меняется. Оставшиеся вершины могут потерять все исходящие
        рёбра; решатели удаляют только аттракторы, для которых это невозможно.

        Исключения:
            AlreadyDeadError: Какая-то вершина из `s` уже удалена.
        """
        batch = list(dict.fromkeys(s))
        for v in batch:
            self._check_id(v)
            if not self.alive[v]:
                raise AlreadyDeadError(v)
        for v in batch:
            for w in self._out[v]:
                del self._in[w][v]
                del self._seq[(v, w)]
            for u in self._in[v]:
                del self._out[u][v]
                del self._seq[(u, v)]
            self._out[v] = {}
            self._in[v] = {}
            self.alive[v] = False
        self._num_alive -= len(batch)

    def _switch_mode(self, requested: UpdateMode) -> None:
        if self.update_mode not in (UpdateMode.NONE, requested):
            raise UpdateModeError(self.update_mode.value, requested.value)
        self.update_mode = requested

    def delete_edge(self, u: int, v: int) -> None:
        """Удалить ребро игрока 1.

        Исключения:
            NotPlayer1EdgeError: `u` принадлежит игроку 2.
            NoSuchEdgeError: Ребра нет.
            LastOutedgeError: Это последнее исходящее ребро `u`.
            UpdateModeError: На графе уже выполнялись вставки.
        """
        self._check_id(u)
        self._check_id(v)
        if self.owner[u] is not Owner.PLAYER1:
            raise NotPlayer1EdgeError(u, v)
        if v not in self._out[u]:
            raise NoSuchEdgeError(u, v)
        if len(self._out[u]) < 2:
            raise LastOutedgeError(u, v)
        self._switch_mode(UpdateMode.DECREMENTAL)
        del self._out[u][v]
        del self._in[v][u]
        del self._seq[(u, v)]

    def insert_edge(self, u: int, v: int) -> None:
        """Вставить ребро игрока 1.

        Источник игрока 1 всегда попадает во вторую группу входящих рёбер,
        поэтому ребро просто дописывается в конец списка `v`.

        Исключения:
            NotPlayer1EdgeError: `u` принадлежит игроку 2 (проверяется первым).
            EdgeExistsError: Ребро уже есть.
            AlreadyDeadError: Один из концов удалён.
            UpdateModeError: На графе уже выполнялись удаления.
        """
        self._check_id(u)
        self._check_id(v)
        if self.owner[u] is not Owner.PLAYER1:
            raise NotPlayer1EdgeError(u, v)
        if v in self._out[u]:
            raise EdgeExistsError(u, v)
        for w in (u, v):
            if not self.alive[w]:
                raise AlreadyDeadError(w)
        self._switch_mode(UpdateMode.INCREMENTAL)
        self._out[u][v] = None
        self._in[v][u] = None
        self._seq[(u, v)] = self._next_seq
        self._next_seq += 1

    def copy(self) -> "GameGraph":
        """Независимая копия (рабочий граф для решателей)."""
        g = GameGraph.__new__(GameGraph)
        g.n = self.n
        g.owner = list(self.owner)
        g.buchi = list(self.buchi)
        g.alive = list(self.alive)
        g.update_mode = self.update_mode
        g._out = [dict(d) for d in self._out]
        g._in = [dict(d) for d in self._in]
        g._seq = dict(self._seq)
        g._next_seq = self._next_seq
        g._num_alive = self._num_alive
        return g

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GameGraph):
            return NotImplemented
        return (
            self.owner == other.owner
            and self.buchi == other.buchi
            and self.alive == other.alive
            and [list(d) for d in self._out] == [list(d) for d in other._out]
            and [list(d) for d in self._in] == [list(d) for d in other._in]
        )

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"GameGraph(n={self.n}, alive={self._num_alive}, m={self.num_edges})"
