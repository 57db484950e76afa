"""Обработчик загрузки игрового графа из текстового файла."""

import logging

from ..context import RunContext
from ..utils.formats import parse_game
from .base import Handler

logger = logging.getLogger(__name__)


class LoadGameHandler(Handler):
    """Прочитать файл `buchi-game v1` и построить граф."""

    def _handle(self, ctx: RunContext) -> RunContext:
        """Разобрать `ctx.input_path` и записать граф в контекст.

        Аргументы:
            ctx: Контекст запуска с заданным `input_path`.

        Возвращает:
            Контекст с заполненными `ctx.graph` и `ctx.diag["n"]`, `ctx.diag["m"]`.

        Исключения:
            FileNotFoundError: Файла нет.
            GameSyntaxError: Нарушен формат файла.
        """
        if ctx.input_path is None:
            raise RuntimeError("input_path is not set. Check the handler order.")
        text = ctx.input_path.read_text(encoding="utf-8-sig")
        ctx.graph = parse_game(text)
        ctx.diag["n"] = ctx.graph.n
        ctx.diag["m"] = ctx.graph.num_edges
        logger.info("Loaded game: n=%d, m=%d", ctx.graph.n, ctx.graph.num_edges)
        return ctx
