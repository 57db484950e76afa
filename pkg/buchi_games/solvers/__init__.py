"""Инициализация пакета решателей и реестр по именам."""

from .base import BaseMecSolver, BaseSolver
from .buchi import ClassicalSolver, FastSolver, ProgressMeasureSolver
from .mec import FastMecSolver, NaiveMecSolver

BUCHI_SOLVERS: dict[str, type[BaseSolver]] = {
    cls.name: cls for cls in (ClassicalSolver, FastSolver, ProgressMeasureSolver)
}
MEC_SOLVERS: dict[str, type[BaseMecSolver]] = {
    cls.name: cls for cls in (FastMecSolver, NaiveMecSolver)
}

__all__ = [
    "BaseSolver",
    "BaseMecSolver",
    "ClassicalSolver",
    "FastSolver",
    "ProgressMeasureSolver",
    "FastMecSolver",
    "NaiveMecSolver",
    "BUCHI_SOLVERS",
    "MEC_SOLVERS",
]
