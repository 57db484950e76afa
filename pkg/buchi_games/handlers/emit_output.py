"""Обработчик записи строк результата в файл или стандартный вывод."""

import logging
import sys

from ..context import RunContext
from .base import Handler

logger = logging.getLogger(__name__)


class EmitOutputHandler(Handler):
    """Записать `ctx.lines` в `ctx.output_path` или в stdout."""

    def _handle(self, ctx: RunContext) -> RunContext:
        text = "".join(line + "\n" for line in ctx.lines)
        if ctx.output_path is None:
            sys.stdout.write(text)
        else:
            ctx.output_path.write_text(text, encoding="utf-8")
            logger.info("Saved: %s", ctx.output_path)
        return ctx
