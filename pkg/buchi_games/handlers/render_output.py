"""Обработчики, превращающие результаты в строки вывода CLI."""

from ..context import RunContext
from ..game_graph import Owner, VertexSet
from ..utils.formats import render_game
from .base import Handler


def _ids(vertices: VertexSet) -> str:
    return " ".join(str(v) for v in sorted(vertices))


class RenderWinningSetHandler(Handler):
    """Вывести W_1 по одной вершине в строке, по желанию со стратегией.

    Аргументы:
        with_strategy: Добавить строки `v -> σ(v)` для вершин игрока 1 из W_1.
    """

    def __init__(self, with_strategy: bool = False) -> None:
        super().__init__()
        self._with_strategy = with_strategy

    def _handle(self, ctx: RunContext) -> RunContext:
        if ctx.graph is None or ctx.partition is None:
            raise RuntimeError("partition is not computed. Check the handler order.")
        part = ctx.partition
        ctx.lines.extend(str(v) for v in sorted(part.w1))
        if self._with_strategy:
            ctx.lines.extend(
                f"{v} -> {part.strategy1[v]}"
                for v in sorted(part.w1)
                if ctx.graph.owner[v] is Owner.PLAYER1
            )
        return ctx


class RenderMecHandler(Handler):
    """Вывести каждую MEC строкой отсортированных id, затем строку `non-mec:`."""

    def _handle(self, ctx: RunContext) -> RunContext:
        if ctx.decomposition is None:
            raise RuntimeError("decomposition is not computed. Check the handler order.")
        mecs, _ = ctx.decomposition.canonical()
        ctx.lines.extend(" ".join(map(str, c)) for c in mecs)
        ctx.lines.append(f"non-mec: {_ids(ctx.decomposition.non_mec)}".rstrip())
        return ctx


class RenderAnswersHandler(Handler):
    """Вывести ответ на каждый запрос трассы: `query <k>: <W_1>`."""

    def _handle(self, ctx: RunContext) -> RunContext:
        if ctx.answers is None:
            raise RuntimeError("trace is not replayed. Check the handler order.")
        for k, w1 in enumerate(ctx.answers):
            ctx.lines.append(f"query {k}: {_ids(w1)}".rstrip())
        return ctx


class RenderGameHandler(Handler):
    def _handle(self, ctx: RunContext) -> RunContext:
        if ctx.graph is None:
            raise RuntimeError("graph is not built. Check the handler order.")
        ctx.lines.extend(render_game(ctx.graph).splitlines())
        return ctx
