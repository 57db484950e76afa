"""Контекст запуска команды CLI для передачи данных между шагами цепочки."""

from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

import pandas as pd

from .bench import BenchInstance
from .classical import WinningPartition
from .game_graph import GameGraph, VertexSet
from .mec import MecDecomposition
from .utils.formats import TraceEvent


@dataclass
class RunContext:
    """Контекст выполнения одной команды CLI.

    Хранит входные параметры запуска (пути), промежуточные объекты (граф,
    трасса, результаты решателей, отчёт бенчмарка), строки для вывода и
    диагностическую информацию.

    Атрибуты:
        input_path: Путь к файлу игры.
        trace_path: Путь к файлу трассы (команда `dynamic`).
        output_path: Куда записать результат; `None` — стандартный вывод.

        graph: Загруженный или сгенерированный граф.
        trace: Разобранная трасса.
        partition: Результат решателя Бюхи.
        decomposition: Результат разложения MEC.
        answers: Ответы на запросы трассы.
        instances: Графы набора бенчмарка.
        report: Строки отчёта бенчмарка.

        lines: Строки результата для вывода.
        diag: Словарь с диагностикой (счётчики, время, показатели степени).
    """

    input_path: Path | None = None
    trace_path: Path | None = None
    output_path: Path | None = None

    graph: GameGraph | None = None
    trace: list[TraceEvent] | None = None
    partition: WinningPartition | None = None
    decomposition: MecDecomposition | None = None
    answers: list[VertexSet] | None = None
    instances: list[BenchInstance] | None = None
    report: pd.DataFrame | None = None

    lines: list[str] = field(default_factory=list)
    diag: dict[str, Any] = field(default_factory=dict)
