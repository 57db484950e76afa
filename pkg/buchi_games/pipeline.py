"""Сборка цепочек обработчиков для команд CLI."""

from collections.abc import Sequence

from .bench import BenchConfig
from .handlers.base import Handler
from .handlers.check_strategy import CheckStrategyHandler
from .handlers.decompose_mec import DecomposeMecHandler
from .handlers.emit_output import EmitOutputHandler
from .handlers.generate_game import GenerateGameHandler
from .handlers.load_game import LoadGameHandler
from .handlers.load_trace import LoadTraceHandler
from .handlers.render_output import (
    RenderAnswersHandler,
    RenderGameHandler,
    RenderMecHandler,
    RenderWinningSetHandler,
)
from .handlers.replay_trace import ReplayTraceHandler
from .handlers.run_bench import (
    BuildSuiteHandler,
    FitScalingHandler,
    RunBenchHandler,
    SaveReportHandler,
)
from .handlers.solve_buchi import SolveBuchiHandler
from .replay import ReplayMode
from .solvers import BaseMecSolver, BaseSolver
from .utils.generators import ChainOfTrapsConfig, GeneratorConfig


def _chain(handlers: Sequence[Handler]) -> Handler:
    """Связать обработчики по порядку и вернуть голову цепочки."""
    head = handlers[0]
    cur = head
    for h in handlers[1:]:
        cur.set_next(h)
        cur = h
    return head


def build_solve_pipeline(
    solver: BaseSolver, check: bool = False, with_strategy: bool = False
) -> Handler:
    """Цепочка команды `solve`: загрузка, решение, проверка, вывод W_1.

    Аргументы:
        solver: Решатель игры Бюхи.
        check: Проверить стратегию после решения.
        with_strategy: Печатать строки `v -> σ(v)`.

    Возвращает:
        Голова цепочки.
    """
    steps: list[Handler] = [LoadGameHandler(), SolveBuchiHandler(solver)]
    if check:
        steps.append(CheckStrategyHandler())
    steps += [RenderWinningSetHandler(with_strategy), EmitOutputHandler()]
    return _chain(steps)


def build_mec_pipeline(solver: BaseMecSolver) -> Handler:
    return _chain(
        [LoadGameHandler(), DecomposeMecHandler(solver), RenderMecHandler(), EmitOutputHandler()]
    )


def build_dynamic_pipeline(mode: ReplayMode) -> Handler:
    return _chain(
        [
            LoadGameHandler(),
            LoadTraceHandler(),
            ReplayTraceHandler(mode),
            RenderAnswersHandler(),
            EmitOutputHandler(),
        ]
    )


def build_gen_pipeline(config: GeneratorConfig | ChainOfTrapsConfig) -> Handler:
    return _chain([GenerateGameHandler(config), RenderGameHandler(), EmitOutputHandler()])


def build_bench_pipeline(config: BenchConfig) -> Handler:
    """Цепочка команды `bench`: набор, замеры, оценка роста, CSV-отчёт."""
    return _chain(
        [
            BuildSuiteHandler(config),
            RunBenchHandler(config),
            FitScalingHandler(),
            SaveReportHandler(),
        ]
    )
