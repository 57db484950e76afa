"""Обработчик самопроверки стратегии игрока 1."""

import logging

from ..attractor import verify_buchi_strategy
from ..context import RunContext
from ..errors import InvariantViolation
from .base import Handler

logger = logging.getLogger(__name__)


class CheckStrategyHandler(Handler):
    """Проверить, что стратегия решателя выигрывает на W_1 и W_2 замкнуто.

    Исключения:
        InvariantViolation: Стратегия не прошла проверку или W_1 ∪ W_2 ≠ V.
    """

    def _handle(self, ctx: RunContext) -> RunContext:
        if ctx.graph is None or ctx.partition is None:
            raise RuntimeError("partition is not computed. Check the handler order.")
        g, part = ctx.graph, ctx.partition
        if part.w1 | part.w2 != g.alive_set() or part.w1 & part.w2:
            raise InvariantViolation("winning sets do not partition the vertices")
        if not verify_buchi_strategy(g, part.w1, part.strategy1):
            raise InvariantViolation("player-1 strategy is not winning on W1")
        ctx.diag["checked"] = True
        logger.info("Strategy check passed")
        return ctx
