"""Генераторы случайных и специально построенных игровых графов.

Все генераторы детерминированы при фиксированном `seed`: используется
`numpy.random.default_rng` (PCG64).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from ..errors import InfeasibleDensityError, InputError
from ..game_graph import GameGraph, Owner

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GeneratorConfig:
    """Параметры случайного графа.

    Аргументы:
        n: Число вершин.
        target_m: Число рёбер (не меньше `n`, не больше `n²`).
        p2_fraction: Доля вершин игрока 2.
        buchi_fraction: Доля вершин Бюхи.
        seed: Зерно генератора.
    """

    n: int
    target_m: int
    p2_fraction: float = 0.5
    buchi_fraction: float = 0.2
    seed: int = 0


@dataclass(frozen=True)
class ChainOfTrapsConfig:
    """Параметры семейства «цепочка ловушек».

    Аргументы:
        chain: Число звеньев; классический алгоритм делает не меньше
            `chain` итераций.
        clique: Размер плотной клики игрока 1, выигрышной для него.
        seed: Зерно (перемешивает порядок рёбер клики).
    """

    chain: int
    clique: int
    seed: int = 0


def _pick(rng: np.random.Generator, n: int, fraction: float) -> np.ndarray:
    count = min(n, int(round(fraction * n)))
    mask = np.zeros(n, dtype=bool)
    mask[rng.permutation(n)[:count]] = True
    return mask


def gen_random(
    n: int,
    target_m: int,
    p2_fraction: float = 0.5,
    buchi_fraction: float = 0.2,
    seed: int = 0,
) -> GameGraph:
    """Сгенерировать случайный игровой граф.

    Каждая вершина получает одно обязательное случайное исходящее ребро,
    остальные `target_m - n` рёбер выбираются равномерно без повторений
    среди оставшихся пар. Владельцы и отметки Бюхи назначаются случайному
    подмножеству размера round(доля · n).

    Исключения:
        InputError: `n < 1`, `target_m < n` или доля вне [0, 1].
        InfeasibleDensityError: `target_m > n²`.
    """
    if n < 1:
        raise InputError("n must be positive")
    if target_m < n:
        raise InputError(f"target_m={target_m} must be at least n={n}")
    if target_m > n * n:
        raise InfeasibleDensityError(n, target_m)
    for name, fraction in (("p2_fraction", p2_fraction), ("buchi_fraction", buchi_fraction)):
        if not 0.0 <= fraction <= 1.0:
            raise InputError(f"{name}={fraction} must lie in [0, 1]")

    rng = np.random.default_rng(seed)
    p2 = _pick(rng, n, p2_fraction)
    buchi = _pick(rng, n, buchi_fraction)
    vertices = [
        (Owner.PLAYER2 if p2[v] else Owner.PLAYER1, bool(buchi[v])) for v in range(n)
    ]

    heads = rng.integers(0, n, size=n)
    mandatory = [(u, int(heads[u])) for u in range(n)]
    taken = {u * n + v for u, v in mandatory}
    extra = target_m - n
    pool = rng.choice(n * n, size=min(n * n, extra + n), replace=False)
    sampled = [int(k) for k in pool if int(k) not in taken][:extra]
    edges = mandatory + [(k // n, k % n) for k in sampled]

    logger.debug("gen_random: n=%d, m=%d, seed=%d", n, len(edges), seed)
    return GameGraph.build(vertices, edges)


def gen_chain_of_traps(chain: int, clique: int, seed: int = 0) -> GameGraph:
    """Сгенерировать граф, на котором классический алгоритм делает Θ(chain) итераций.

    Звено j: x_j (игрок 1, не Бюхи) с петлёй и ребром в b_{j-1};
    b_j (игрок 2, Бюхи) с единственным ребром в x_j. b_0 ведёт в ловушку t
    (игрок 2, петля). Каждая итерация отсекает одно звено: после удаления
    b_{j-1} у x_j остаётся только петля. Клика игрока 1 с одной вершиной
    Бюхи выигрышна для игрока 1 и заставляет каждую итерацию обходить
    Θ(clique²) рёбер.
    """
    if chain < 1 or clique < 1:
        raise InputError("chain and clique must be positive")
    rng = np.random.default_rng(seed)
    vertices: list[tuple[Owner, bool]] = []
    edges: list[tuple[int, int]] = []

    def add(owner: Owner, buchi: bool) -> int:
        vertices.append((owner, buchi))
        return len(vertices) - 1

    trap = add(Owner.PLAYER2, False)
    edges.append((trap, trap))
    prev = add(Owner.PLAYER2, True)
    edges.append((prev, trap))
    for _ in range(chain):
        x = add(Owner.PLAYER1, False)
        b = add(Owner.PLAYER2, True)
        edges += [(x, x), (x, prev), (b, x)]
        prev = b

    members = [add(Owner.PLAYER1, k == 0) for k in range(clique)]
    block = [(u, v) for u in members for v in members]
    order = rng.permutation(len(block))
    edges += [block[k] for k in order]
    return GameGraph.build(vertices, edges)


def gen_from_config(config: GeneratorConfig) -> GameGraph:
    return gen_random(
        config.n,
        config.target_m,
        config.p2_fraction,
        config.buchi_fraction,
        config.seed,
    )
