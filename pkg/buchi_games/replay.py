"""Воспроизведение трассы обновлений на динамическом решателе."""

from __future__ import annotations

import logging
from collections.abc import Sequence
from enum import Enum

from .errors import InputError, MixedTraceError, TraceEventError
from .game_graph import GameGraph, VertexSet
from .progress_measure import DecrementalSolver, IncrementalSolver
from .utils.formats import EventKind, TraceEvent, check_homogeneous

logger = logging.getLogger(__name__)


class ReplayMode(str, Enum):
    DECREMENTAL = "decremental"
    INCREMENTAL = "incremental"


_EXPECTED_KIND = {
    ReplayMode.DECREMENTAL: EventKind.DELETE,
    ReplayMode.INCREMENTAL: EventKind.INSERT,
}


def replay_trace(
    g: GameGraph, trace: Sequence[TraceEvent], mode: ReplayMode
) -> list[VertexSet]:
    """Применить события трассы и собрать ответы на запросы.

    Решатель строится на копии `g`, входной граф не меняется.

    Аргументы:
        g: Исходный граф.
        trace: События; все обновления одного вида, совпадающего с `mode`.
        mode: Режим решателя.

    Возвращает:
        Текущее W_1 для каждого события `query` в порядке появления.

    Исключения:
        MixedTraceError: Трасса неоднородна или не совпадает с режимом.
        TraceEventError: Ошибка решателя; содержит номер события.
    """
    mode = ReplayMode(mode)
    kind = check_homogeneous(trace)
    if kind is not None and kind is not _EXPECTED_KIND[mode]:
        raise MixedTraceError(f"{kind.value} events cannot be replayed in {mode.value} mode")

    graph = g.copy()
    solver = (
        DecrementalSolver(graph)
        if mode is ReplayMode.DECREMENTAL
        else IncrementalSolver(graph)
    )
    answers: list[VertexSet] = []
    for index, event in enumerate(trace):
        if event.kind is EventKind.QUERY:
            answers.append(solver.w1())
            continue
        try:
            if mode is ReplayMode.DECREMENTAL:
                solver.delete(event.u, event.v)
            else:
                solver.insert(event.u, event.v)
        except InputError as e:
            raise TraceEventError(index, e) from e
    logger.info("replayed %d events, %d queries", len(trace), len(answers))
    return answers
