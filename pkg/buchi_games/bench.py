"""Бенчмарк решателей: генерация набора, замеры, оценка показателя роста."""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass

import numpy as np
import pandas as pd
from sklearn.linear_model import LinearRegression

from .errors import InputError, InvariantViolation
from .game_graph import GameGraph
from .solvers import BUCHI_SOLVERS, FastSolver
from .utils.generators import gen_random

logger = logging.getLogger(__name__)

REPORT_COLUMNS = ["n", "m", "algo", "seed", "wall_ms", "work_counter"]

_DENSITIES = ("dense", "sparse")


@dataclass(frozen=True)
class BenchConfig:
    """Настройки набора бенчмарка.

    Аргументы:
        suite: Имя набора (попадает в логи).
        sizes: Размеры графов.
        seeds: Зёрна генератора; на каждый размер по графу на зерно.
        algorithms: Имена решателей из `BUCHI_SOLVERS`.
        density: "dense" (m ≈ n²/4) | "sparse" (m ≈ 2n).
        max_level: Предел малых уровней для решателя "fast".
    """

    suite: str
    sizes: tuple[int, ...]
    seeds: tuple[int, ...] = (0,)
    algorithms: tuple[str, ...] = ("classical", "fast")
    density: str = "dense"
    max_level: int | None = None

    @classmethod
    def for_suite(cls, suite: str) -> "BenchConfig":
        """Готовые наборы `dense` и `sparse`."""
        if suite == "dense":
            return cls(suite="dense", sizes=(500, 1000, 2000), density="dense")
        if suite == "sparse":
            return cls(suite="sparse", sizes=(500, 1000, 2000, 4000), density="sparse")
        raise InputError(f"unknown bench suite {suite!r}, expected one of {_DENSITIES}")

    def target_m(self, n: int) -> int:
        if self.density == "dense":
            return max(n, n * n // 4)
        if self.density == "sparse":
            return min(n * n, 2 * n)
        raise InputError(f"unknown density {self.density!r}")


@dataclass(frozen=True)
class BenchInstance:
    seed: int
    graph: GameGraph

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def m(self) -> int:
        return self.graph.num_edges


def build_suite(config: BenchConfig) -> list[BenchInstance]:
    """Сгенерировать графы набора в порядке (размер, зерно)."""
    unknown = [a for a in config.algorithms if a not in BUCHI_SOLVERS]
    if unknown:
        raise InputError(f"unknown algorithms {unknown}, expected {sorted(BUCHI_SOLVERS)}")
    return [
        BenchInstance(seed, gen_random(n, config.target_m(n), seed=seed))
        for n in config.sizes
        for seed in config.seeds
    ]


def run_instances(
    instances: list[BenchInstance],
    algorithms: tuple[str, ...],
    max_level: int | None = None,
) -> pd.DataFrame:
    """Прогнать каждый решатель на каждом графе и собрать строки отчёта.

    Все решатели на одном графе должны дать одно и то же W_1.

    Исключения:
        InvariantViolation: Решатели разошлись в ответе.
    """
    rows: list[dict[str, object]] = []
    for inst in instances:
        reference: frozenset[int] | None = None
        for algo in algorithms:
            solver = FastSolver(max_level) if algo == "fast" else BUCHI_SOLVERS[algo]()
            start = time.perf_counter()
            partition = solver.solve(inst.graph)
            wall_ms = (time.perf_counter() - start) * 1000.0
            if reference is None:
                reference = partition.w1
            elif partition.w1 != reference:
                raise InvariantViolation(
                    f"{algo} disagrees with {algorithms[0]} on n={inst.n}, seed={inst.seed}"
                )
            rows.append(
                {
                    "n": inst.n,
                    "m": inst.m,
                    "algo": algo,
                    "seed": inst.seed,
                    "wall_ms": round(wall_ms, 3),
                    "work_counter": partition.stats.work,
                }
            )
            logger.debug("%s n=%d m=%d: %.1f ms", algo, inst.n, inst.m, wall_ms)
    return pd.DataFrame(rows, columns=REPORT_COLUMNS)


def fit_exponents(report: pd.DataFrame) -> dict[str, float]:
    """Показатель роста work_counter по n для каждого алгоритма.

    Наклон прямой log(work) ~ log(n); алгоритмы меньше чем с двумя
    различными n пропускаются.
    """
    exponents: dict[str, float] = {}
    for algo, group in report.groupby("algo", sort=True):
        if group["n"].nunique() < 2:
            continue
        x = np.log(group["n"].to_numpy(dtype=float)).reshape(-1, 1)
        y = np.log(np.maximum(group["work_counter"].to_numpy(dtype=float), 1.0))
        exponents[str(algo)] = float(LinearRegression().fit(x, y).coef_[0])
    return exponents


def bench(config: BenchConfig) -> pd.DataFrame:
    """Построить набор и вернуть строки отчёта `n,m,algo,seed,wall_ms,work_counter`."""
    instances = build_suite(config)
    logger.info("bench %s: %d instances", config.suite, len(instances))
    return run_instances(instances, config.algorithms, config.max_level)
