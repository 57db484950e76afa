"""Переборные оракулы для проверки решателей на малых графах."""

from __future__ import annotations

import logging
import math
from collections.abc import Iterator, Sequence
from itertools import product

from .classical import WinningPartition
from .errors import TooLargeError
from .game_graph import GameGraph, Owner, VertexSet
from .mec import MecDecomposition, is_end_component
from .progress_measure import ProgressMeasure

logger = logging.getLogger(__name__)

MAX_PROFILES = 10**6
MAX_MEC_VERTICES = 15

StrategyProfile = dict[int, int]


def _choices(g: GameGraph, player: Owner) -> tuple[list[int], list[list[int]]]:
    owned = [v for v in g.vertices() if g.owner[v] is player]
    return owned, [g.out(v) for v in owned]


def _profiles(owned: Sequence[int], options: Sequence[list[int]]) -> Iterator[StrategyProfile]:
    for pick in product(*options):
        yield dict(zip(owned, pick))


def _guard_profiles(g: GameGraph) -> None:
    total = math.prod(g.outdeg(v) for v in g.vertices())
    if total > MAX_PROFILES:
        raise TooLargeError(
            f"{total} strategy profiles exceed the oracle limit of {MAX_PROFILES}"
        )


def _lasso(choice: dict[int, int], start: int) -> tuple[list[int], list[int]]:
    """(префикс, цикл) единственной игры из `start`."""
    seen: dict[int, int] = {}
    walk: list[int] = []
    v = start
    while v not in seen:
        seen[v] = len(walk)
        walk.append(v)
        v = choice[v]
    return walk[: seen[v]], walk[seen[v]:]


def _buchi_cycles(g: GameGraph, choice: dict[int, int]) -> dict[int, bool]:
    """Для каждой вершины: содержит ли цикл её игры вершину Бюхи."""
    result: dict[int, bool] = {}
    for start in g.vertices():
        pos: dict[int, int] = {}
        path: list[int] = []
        v = start
        while v not in result and v not in pos:
            pos[v] = len(path)
            path.append(v)
            v = choice[v]
        if v in result:
            hit = result[v]
        else:
            hit = any(g.buchi[c] for c in path[pos[v]:])
        for p in path:
            result[p] = hit
    return result


def oracle_buchi(g: GameGraph) -> WinningPartition:
    """Выигрышные множества перебором всех пар позиционных стратегий.

    v ∈ W_1 тогда и только тогда, когда существует σ, при которой для
    всех π цикл игры из v содержит вершину Бюхи.

    Исключения:
        TooLargeError: Произведение степеней больше `MAX_PROFILES`.
    """
    _guard_profiles(g)
    owned1, options1 = _choices(g, Owner.PLAYER1)
    owned2, options2 = _choices(g, Owner.PLAYER2)
    alive = g.alive_set()
    w1: set[int] = set()
    for sigma in _profiles(owned1, options1):
        good = set(alive)
        for pi in _profiles(owned2, options2):
            hits = _buchi_cycles(g, {**sigma, **pi})
            good = {v for v in good if hits[v]}
            if not good:
                break
        w1 |= good
    return WinningPartition(w1=frozenset(w1), w2=alive - frozenset(w1))


def maxvisit_oracle(g: GameGraph, v: int) -> int:
    """maxvisit(v): min по π, max по σ числа посещений вершин Бюхи из `v`.

    Игра с циклом через вершину Бюхи даёт бесконечность. Возвращает
    значение в шкале мер прогресса: число посещений или ⊤ = n + 1, если
    v ∉ W_2.

    Исключения:
        TooLargeError: Произведение степеней больше `MAX_PROFILES`.
    """
    _guard_profiles(g)
    top = ProgressMeasure.zeros(g.n).top
    owned1, options1 = _choices(g, Owner.PLAYER1)
    owned2, options2 = _choices(g, Owner.PLAYER2)
    best = top
    for pi in _profiles(owned2, options2):
        worst = 0
        for sigma in _profiles(owned1, options1):
            prefix, cycle = _lasso({**sigma, **pi}, v)
            if any(g.buchi[c] for c in cycle):
                worst = top
                break
            worst = max(worst, sum(1 for c in prefix if g.buchi[c]))
        best = min(best, worst)
    return best if best <= g.n else top


def oracle_mec(g: GameGraph) -> MecDecomposition:
    """Разложение MEC перебором всех подмножеств вершин.

    Остаются максимальные по включению концевые компоненты; объединение
    пересекающихся концевых компонент снова концевая компонента, поэтому
    максимальные не пересекаются.

    Исключения:
        TooLargeError: Живых вершин больше `MAX_MEC_VERTICES`.
    """
    verts = sorted(g.vertices())
    if len(verts) > MAX_MEC_VERTICES:
        raise TooLargeError(
            f"{len(verts)} vertices exceed the subset oracle limit of {MAX_MEC_VERTICES}"
        )
    components: list[VertexSet] = []
    for mask in range(1, 1 << len(verts)):
        subset = frozenset(v for k, v in enumerate(verts) if mask >> k & 1)
        if is_end_component(g, subset):
            components.append(subset)
    components.sort(key=len, reverse=True)
    maximal: list[VertexSet] = []
    for c in components:
        if not any(c <= m for m in maximal):
            maximal.append(c)
    covered = frozenset().union(*maximal)
    return MecDecomposition(mecs=maximal, non_mec=frozenset(verts) - covered)
