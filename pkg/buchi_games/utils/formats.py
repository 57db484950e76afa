"""Текстовые форматы игрового графа и трассы обновлений.

Формат игры (построчный, поля разделены пробелами)::

    buchi-game v1
    vertices <n>
    <id> <owner: 1|2> <buchi: 0|1>
    edges <m>
    <u> <v>

Порядок строк рёбер задаёт порядок внутри групп входящих рёбер.
Формат трассы: строки `delete <u> <v>`, `insert <u> <v>`, `query`.
Строки, начинающиеся с `#`, и пустые строки пропускаются.
"""

from __future__ import annotations

import re
from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from enum import Enum

from ..errors import GameSyntaxError, MixedTraceError
from ..game_graph import GameGraph, Owner

HEADER = "buchi-game v1"

_SPACE_RE = re.compile(r"\s+")


def _significant_lines(text: str) -> Iterator[tuple[int, list[str]]]:
    """Пронумерованные непустые строки без комментариев, разбитые на поля."""
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _SPACE_RE.sub(" ", raw).strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line.split(" ")


def _int(token: str, lineno: int, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise GameSyntaxError(lineno, f"expected integer {what}, got {token!r}") from None


def _counted(
    lines: Iterator[tuple[int, list[str]]], keyword: str, last_line: int
) -> tuple[int, int]:
    item = next(lines, None)
    if item is None:
        raise GameSyntaxError(last_line, f"missing '{keyword} <count>' line")
    lineno, fields = item
    if len(fields) != 2 or fields[0] != keyword:
        raise GameSyntaxError(lineno, f"expected '{keyword} <count>'")
    count = _int(fields[1], lineno, f"{keyword} count")
    if count < 0:
        raise GameSyntaxError(lineno, f"negative {keyword} count")
    return lineno, count


def parse_game(text: str) -> GameGraph:
    """Разобрать текст игры и построить граф.

    Аргументы:
        text: Содержимое файла в формате `buchi-game v1`.

    Возвращает:
        Граф, построенный через `GameGraph.build`.

    Исключения:
        GameSyntaxError: Нарушен формат (с номером строки).
        InputError: Ошибки построения графа (`ZeroOutdegreeError` и т.п.).
    """
    lines = _significant_lines(text)
    first = next(lines, None)
    if first is None or " ".join(first[1]) != HEADER:
        raise GameSyntaxError(first[0] if first else 1, f"expected header '{HEADER}'")

    lineno, n = _counted(lines, "vertices", first[0])
    vertices: list[tuple[Owner, bool]] = []
    for expected in range(n):
        item = next(lines, None)
        if item is None:
            raise GameSyntaxError(lineno, f"expected {n} vertex records, got {expected}")
        lineno, fields = item
        if len(fields) != 3:
            raise GameSyntaxError(lineno, "vertex record must be '<id> <owner> <buchi>'")
        vid = _int(fields[0], lineno, "vertex id")
        if vid != expected:
            raise GameSyntaxError(lineno, f"vertex ids must be consecutive, expected {expected}")
        if fields[1] not in ("1", "2"):
            raise GameSyntaxError(lineno, f"owner must be 1 or 2, got {fields[1]!r}")
        if fields[2] not in ("0", "1"):
            raise GameSyntaxError(lineno, f"buchi flag must be 0 or 1, got {fields[2]!r}")
        vertices.append((Owner(int(fields[1])), fields[2] == "1"))

    lineno, m = _counted(lines, "edges", lineno)
    edges: list[tuple[int, int]] = []
    for item in lines:
        lineno, fields = item
        if len(fields) != 2:
            raise GameSyntaxError(lineno, "edge record must be '<u> <v>'")
        u = _int(fields[0], lineno, "edge source")
        v = _int(fields[1], lineno, "edge target")
        for w in (u, v):
            if not 0 <= w < n:
                raise GameSyntaxError(lineno, f"vertex id {w} out of range [0, {n})")
        edges.append((u, v))
    if len(edges) != m:
        raise GameSyntaxError(lineno, f"declared {m} edges, found {len(edges)}")

    return GameGraph.build(vertices, edges)


def render_game(g: GameGraph) -> str:
    """Записать граф в формат `buchi-game v1` (обратная к `parse_game`)."""
    if g.num_alive != g.n:
        raise ValueError("only graphs without removed vertices can be rendered")
    edges = g.edges()
    lines = [HEADER, f"vertices {g.n}"]
    lines += [f"{v} {int(g.owner[v])} {int(g.buchi[v])}" for v in range(g.n)]
    lines.append(f"edges {len(edges)}")
    lines += [f"{u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"


class EventKind(str, Enum):
    DELETE = "delete"
    INSERT = "insert"
    QUERY = "query"


@dataclass(frozen=True)
class TraceEvent:
    """Событие трассы; у `QUERY` концы ребра отсутствуют."""

    kind: EventKind
    u: int | None = None
    v: int | None = None


def check_homogeneous(events: Iterable[TraceEvent]) -> EventKind | None:
    """Вернуть вид обновлений трассы (или `None`, если есть только запросы).

    Исключения:
        MixedTraceError: В трассе есть и вставки, и удаления.
    """
    kinds = {e.kind for e in events if e.kind is not EventKind.QUERY}
    if len(kinds) > 1:
        raise MixedTraceError("trace mixes insert and delete events")
    return next(iter(kinds), None)


def parse_trace(text: str) -> list[TraceEvent]:
    """Разобрать трассу обновлений.

    Исключения:
        GameSyntaxError: Неизвестное событие или неверные поля.
        MixedTraceError: Трасса смешивает вставки и удаления.
    """
    events: list[TraceEvent] = []
    for lineno, fields in _significant_lines(text):
        try:
            kind = EventKind(fields[0])
        except ValueError:
            raise GameSyntaxError(lineno, f"unknown trace event {fields[0]!r}") from None
        if kind is EventKind.QUERY:
            if len(fields) != 1:
                raise GameSyntaxError(lineno, "'query' takes no arguments")
            events.append(TraceEvent(kind))
            continue
        if len(fields) != 3:
            raise GameSyntaxError(lineno, f"expected '{kind.value} <u> <v>'")
        events.append(
            TraceEvent(kind, _int(fields[1], lineno, "u"), _int(fields[2], lineno, "v"))
        )
    check_homogeneous(events)
    return events


def render_trace(events: Iterable[TraceEvent]) -> str:
    lines = [
        e.kind.value if e.kind is EventKind.QUERY else f"{e.kind.value} {e.u} {e.v}"
        for e in events
    ]
    return "\n".join(lines) + "\n"
