"""Обработчик загрузки трассы обновлений."""

import logging

from ..context import RunContext
from ..utils.formats import parse_trace
from .base import Handler

logger = logging.getLogger(__name__)


class LoadTraceHandler(Handler):
    """Прочитать трассу `delete`/`insert`/`query` из `ctx.trace_path`."""

    def _handle(self, ctx: RunContext) -> RunContext:
        if ctx.trace_path is None:
            raise RuntimeError("trace_path is not set. Check the handler order.")
        ctx.trace = parse_trace(ctx.trace_path.read_text(encoding="utf-8-sig"))
        ctx.diag["events"] = len(ctx.trace)
        logger.info("Loaded trace: %d events", len(ctx.trace))
        return ctx
