import logging

from concurrent.futures import ThreadPoolExecutor
from typing import Sequence

from toricsplit.common.env import max_workers
from toricsplit.common.errors import DimensionMismatchError
from toricsplit.model.types import AugmentedIntersectionMatrix, KaneyamaBundleData, SplittingSystem, Wall, WallRestriction
from toricsplit.splitting.bootstrap import bootstrap
from toricsplit.splitting.restriction import restrict
from toricsplit.toric.fan import walls


def restriction_degrees(restriction: WallRestriction) -> tuple[int, ...]:
    degrees: list[int] = list()
    for block in restriction.blocks:

        # one-dimensional weight spaces need no bootstrapping
        if len(block.chart1_weights) == 1:
            degrees.append(block.chart1_weights[0] - block.chart2_weights[0])
        else:
            degrees.extend(bootstrap(block.chart1_weights, block.chart2_weights, block.pasting))

    return tuple(sorted(degrees, reverse=True))

def splitting_system(data: KaneyamaBundleData, workers: int|None = None) -> SplittingSystem:
    """System of splitting numbers, one non-increasing tuple per wall in wall order."""

    fan_walls: list[Wall] = walls(data.fan)
    workers = workers if workers is not None else max_workers()

    def wall_degrees(wall: Wall) -> tuple[int, ...]:
        return restriction_degrees(restrict(data, wall))

    if workers > 1 and len(fan_walls) > 1:
        with ThreadPoolExecutor(max_workers=workers) as executor:
            tuples: list[tuple[int, ...]] = list(executor.map(wall_degrees, fan_walls))
    else:
        tuples = [wall_degrees(wall) for wall in fan_walls]

    logging.debug(f"Computed splitting numbers on {len(fan_walls)} walls for rank {data.rank} bundle.")

    return SplittingSystem(tuple(tuples))

def twisted_by_class(system: SplittingSystem, q: AugmentedIntersectionMatrix, x: Sequence[int]) -> SplittingSystem:
    """Splitting numbers of E ⊗ O(D) with D = Σ x_k D(v_k)."""

    if len(system.tuples) != q.q.rows:
        raise DimensionMismatchError(f"Splitting system has {len(system.tuples)} walls, intersection matrix {q.q.rows}!")

    return system.twist(q.q.apply(x))
