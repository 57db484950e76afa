"""Интерфейс командной строки: решение игр, разложение MEC, трассы, генерация, бенчмарк."""

import argparse
import dataclasses
import logging
from pathlib import Path

from .bench import BenchConfig
from .context import RunContext
from .errors import InputError, InvariantViolation
from .handlers.base import Handler
from .pipeline import (
    build_bench_pipeline,
    build_dynamic_pipeline,
    build_gen_pipeline,
    build_mec_pipeline,
    build_solve_pipeline,
)
from .replay import ReplayMode
from .solvers import BUCHI_SOLVERS, MEC_SOLVERS, FastSolver
from .utils.generators import ChainOfTrapsConfig, GeneratorConfig

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INPUT_ERROR = 1
EXIT_INVARIANT = 2


def _build_parser() -> argparse.ArgumentParser:
    """Создать парсер аргументов командной строки.

    Возвращает:
        Настроенный экземпляр `argparse.ArgumentParser` с подкомандами
        `solve`, `mec`, `dynamic`, `gen` и `bench`.
    """
    p = argparse.ArgumentParser(
        prog="app",
        description="Решение игр Бюхи и разложение графов на максимальные концевые компоненты.",
    )
    p.add_argument(
        "--log-level",
        type=str,
        default="WARNING",
        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
        help="Уровень подробности логов (логи пишутся в stderr).",
    )
    sub = p.add_subparsers(dest="command", required=True)

    solve = sub.add_parser("solve", help="Вычислить выигрышное множество игрока 1.")
    solve.add_argument("--algo", choices=sorted(BUCHI_SOLVERS), default="fast")
    solve.add_argument("--strategy", action="store_true", help="Печатать строки `v -> σ(v)`.")
    solve.add_argument("--check", action="store_true", help="Проверить стратегию решателя.")
    solve.add_argument(
        "--max-level",
        type=int,
        default=None,
        help="Для --algo fast: перебирать малые уровни только до этого значения.",
    )
    solve.add_argument("game", type=Path, help="Файл игры в формате buchi-game v1.")

    mec = sub.add_parser("mec", help="Разложить граф на максимальные концевые компоненты.")
    mec.add_argument("--algo", choices=sorted(MEC_SOLVERS), default="fast")
    mec.add_argument("game", type=Path)

    dyn = sub.add_parser("dynamic", help="Воспроизвести трассу обновлений рёбер.")
    dyn.add_argument("--mode", choices=[m.value for m in ReplayMode], required=True)
    dyn.add_argument("game", type=Path)
    dyn.add_argument("trace", type=Path)

    gen = sub.add_parser("gen", help="Сгенерировать игровой граф.")
    gen.add_argument("--family", choices=["random", "traps"], default="random")
    gen.add_argument("--n", type=int, default=10, help="Число вершин (random).")
    gen.add_argument("--m", type=int, default=None, help="Число рёбер (random), по умолчанию 2n.")
    gen.add_argument("--p2-fraction", type=float, default=0.5)
    gen.add_argument("--buchi-fraction", type=float, default=0.2)
    gen.add_argument("--chain", type=int, default=10, help="Число звеньев (traps).")
    gen.add_argument("--clique", type=int, default=10, help="Размер клики (traps).")
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--out", type=Path, default=None, help="Файл результата; иначе stdout.")

    bench = sub.add_parser("bench", help="Замерить решатели на наборе случайных графов.")
    bench.add_argument("--suite", choices=["dense", "sparse"], required=True)
    bench.add_argument("--out", type=Path, required=True, help="CSV-отчёт.")
    bench.add_argument("--sizes", type=int, nargs="+", default=None)
    bench.add_argument("--seeds", type=int, nargs="+", default=None)
    bench.add_argument("--algos", choices=sorted(BUCHI_SOLVERS), nargs="+", default=None)
    bench.add_argument("--max-level", type=int, default=None)
    return p


def _bench_config(args: argparse.Namespace) -> BenchConfig:
    config = BenchConfig.for_suite(args.suite)
    if args.max_level is not None and args.algos and "fast" not in args.algos:
        raise InputError("--max-level applies only when --algos includes fast")
    overrides = {
        "sizes": tuple(args.sizes) if args.sizes else None,
        "seeds": tuple(args.seeds) if args.seeds else None,
        "algorithms": tuple(args.algos) if args.algos else None,
        "max_level": args.max_level,
    }
    return dataclasses.replace(config, **{k: v for k, v in overrides.items() if v is not None})


def _prepare(args: argparse.Namespace) -> tuple[Handler, RunContext]:
    """Собрать цепочку и контекст для выбранной подкоманды."""
    if args.command == "solve":
        if args.max_level is not None and args.algo != "fast":
            raise InputError(f"--max-level applies only to --algo fast, got --algo {args.algo}")
        solver = FastSolver(args.max_level) if args.algo == "fast" else BUCHI_SOLVERS[args.algo]()
        return (
            build_solve_pipeline(solver, check=args.check, with_strategy=args.strategy),
            RunContext(input_path=args.game),
        )
    if args.command == "mec":
        return build_mec_pipeline(MEC_SOLVERS[args.algo]()), RunContext(input_path=args.game)
    if args.command == "dynamic":
        return (
            build_dynamic_pipeline(ReplayMode(args.mode)),
            RunContext(input_path=args.game, trace_path=args.trace),
        )
    if args.command == "gen":
        if args.family == "traps":
            config: GeneratorConfig | ChainOfTrapsConfig = ChainOfTrapsConfig(
                args.chain, args.clique, args.seed
            )
        else:
            m = args.m if args.m is not None else min(args.n * args.n, 2 * args.n)
            config = GeneratorConfig(
                args.n, m, args.p2_fraction, args.buchi_fraction, args.seed
            )
        return build_gen_pipeline(config), RunContext(output_path=args.out)
    return build_bench_pipeline(_bench_config(args)), RunContext(output_path=args.out)


def main(argv: list[str] | None = None) -> int:
    """Точка входа CLI: выполнить подкоманду и вернуть код завершения.

    Аргументы:
        argv: Список аргументов командной строки без имени программы. Если не задан,
            используются аргументы из `sys.argv`.

    Возвращает:
        Код завершения процесса:
        - `0`, если команда выполнена успешно;
        - `1` при ошибке входных данных (формат, отсутствующий файл, неверное обновление);
        - `2` при нарушении внутреннего инварианта (провал `--check`, расхождение решателей).
    """
    try:
        args = _build_parser().parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_INPUT_ERROR

    logging.basicConfig(
        level=getattr(logging, args.log_level),
        format="%(levelname)s: %(message)s",
    )

    try:
        pipeline, ctx = _prepare(args)
        pipeline.handle(ctx)
    except FileNotFoundError as e:
        logger.error("Input file not found: %s", e.filename)
        return EXIT_INPUT_ERROR
    except InputError as e:
        logger.error("%s", e)
        return EXIT_INPUT_ERROR
    except InvariantViolation as e:
        logger.error("Invariant violated: %s", e)
        return EXIT_INVARIANT

    if ctx.diag:
        logger.info("Diagnostics: %s", ctx.diag)
    return EXIT_OK
