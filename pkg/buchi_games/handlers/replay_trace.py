"""Обработчик воспроизведения трассы на динамическом решателе."""

import logging

from ..context import RunContext
from ..replay import ReplayMode, replay_trace
from .base import Handler

logger = logging.getLogger(__name__)


class ReplayTraceHandler(Handler):
    """Применить `ctx.trace` к `ctx.graph` и собрать ответы на запросы.

    Аргументы:
        mode: Режим динамического решателя.
    """

    def __init__(self, mode: ReplayMode) -> None:
        super().__init__()
        self._mode = ReplayMode(mode)

    def _handle(self, ctx: RunContext) -> RunContext:
        if ctx.graph is None or ctx.trace is None:
            raise RuntimeError("graph or trace is not loaded. Check the handler order.")
        ctx.answers = replay_trace(ctx.graph, ctx.trace, self._mode)
        ctx.diag["queries"] = len(ctx.answers)
        return ctx
