"""Обработчик генерации игрового графа по конфигурации."""

import logging

from ..context import RunContext
from ..utils.generators import (
    ChainOfTrapsConfig,
    GeneratorConfig,
    gen_chain_of_traps,
    gen_from_config,
)
from .base import Handler

logger = logging.getLogger(__name__)


class GenerateGameHandler(Handler):
    """Сгенерировать граф: случайный или «цепочку ловушек».

    Аргументы:
        config: Параметры генератора; тип конфигурации выбирает семейство.
    """

    def __init__(self, config: GeneratorConfig | ChainOfTrapsConfig) -> None:
        super().__init__()
        self._config = config

    def _handle(self, ctx: RunContext) -> RunContext:
        cfg = self._config
        if isinstance(cfg, ChainOfTrapsConfig):
            ctx.graph = gen_chain_of_traps(cfg.chain, cfg.clique, cfg.seed)
        else:
            ctx.graph = gen_from_config(cfg)
        ctx.diag["seed"] = cfg.seed
        logger.info(
            "Generated game: n=%d, m=%d (seed=%d)",
            ctx.graph.n,
            ctx.graph.num_edges,
            cfg.seed,
        )
        return ctx
