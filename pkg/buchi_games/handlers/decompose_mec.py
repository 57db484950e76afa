"""Обработчик разложения графа на максимальные концевые компоненты."""

import logging

from ..context import RunContext
from ..solvers import BaseMecSolver
from .base import Handler

logger = logging.getLogger(__name__)


class DecomposeMecHandler(Handler):
    """Разложить `ctx.graph` на MEC выбранным алгоритмом.

    Аргументы:
        solver: Алгоритм из реестра `MEC_SOLVERS`.
    """

    def __init__(self, solver: BaseMecSolver) -> None:
        super().__init__()
        self._solver = solver

    def _handle(self, ctx: RunContext) -> RunContext:
        if ctx.graph is None:
            raise RuntimeError("graph is not loaded. Check the handler order.")
        result = self._solver.decompose(ctx.graph)
        ctx.decomposition = result
        ctx.diag["mecs"] = len(result.mecs)
        ctx.diag["work"] = result.stats.work
        logger.info(
            "%s: %d MECs, %d non-MEC vertices",
            self._solver.name,
            len(result.mecs),
            len(result.non_mec),
        )
        return ctx
