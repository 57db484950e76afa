"""Обработчик решения игры Бюхи выбранным решателем."""

import logging

from ..context import RunContext
from ..solvers import BaseSolver
from .base import Handler

logger = logging.getLogger(__name__)


class SolveBuchiHandler(Handler):
    """Вычислить W_1, W_2 и стратегию игрока 1.

    Аргументы:
        solver: Решатель из реестра `BUCHI_SOLVERS`.
    """

    def __init__(self, solver: BaseSolver) -> None:
        super().__init__()
        self._solver = solver

    def _handle(self, ctx: RunContext) -> RunContext:
        """Запустить решатель на `ctx.graph`.

        Возвращает:
            Контекст с `ctx.partition` и счётчиками в `ctx.diag`:
            `iterations`, `work`, `w1_size`.
        """
        if ctx.graph is None:
            raise RuntimeError("graph is not loaded. Check the handler order.")
        partition = self._solver.solve(ctx.graph)
        ctx.partition = partition
        ctx.diag["algo"] = self._solver.name
        ctx.diag["iterations"] = partition.stats.num_iterations
        ctx.diag["work"] = partition.stats.work
        ctx.diag["w1_size"] = len(partition.w1)
        logger.info(
            "%s: |W1|=%d, |W2|=%d, work=%d",
            self._solver.name,
            len(partition.w1),
            len(partition.w2),
            partition.stats.work,
        )
        return ctx
