import logging

from concurrent.futures import ThreadPoolExecutor
from time import time

from toricsplit.common.env import max_workers
from toricsplit.common.errors import FanError, GraphError
from toricsplit.linear.intmatrix import IntVector
from toricsplit.model.types import Fan, WeightedCircularGraph
from toricsplit.toric.fan import make_fan


def cp2() -> WeightedCircularGraph:
    return WeightedCircularGraph((1, 1, 1))

def hirzebruch(a: int) -> WeightedCircularGraph:
    if a < 0:
        raise GraphError(f"Hirzebruch parameter must be nonnegative, got {a}!")

    return WeightedCircularGraph((0, a, 0, -a))

def blowup(g: WeightedCircularGraph, i: int) -> WeightedCircularGraph:
    """Blow up the fixed point between vertex i and vertex i+1 (1-based, cyclic).

    The exceptional vertex gets weight -1 and both neighbours lose 1.
    """

    s: int = g.size
    if i < 1 or i > s:
        raise GraphError(f"Blowup position {i} out of range 1..{s}!")

    weights: list[int] = list(g.weights)
    weights[i - 1] -= 1
    weights[i % s] -= 1

    # the new vertex goes behind position i, a wrap-around insert lands at the end
    weights.insert(i, -1)

    return WeightedCircularGraph(tuple(weights))

def canonical_form(g: WeightedCircularGraph) -> WeightedCircularGraph:
    weights: IntVector = g.weights
    reflected: IntVector = tuple(reversed(weights))

    images: list[IntVector] = list()
    for sequence in (weights, reflected):
        images.extend(sequence[k:] + sequence[:k] for k in range(len(sequence)))

    return WeightedCircularGraph(min(images))

def enumerate_blowups(k: int, workers: int|None = None) -> list[WeightedCircularGraph]:
    """Canonical graphs reachable from the projective plane by exactly k blowups, sorted."""

    if k < 0:
        raise GraphError(f"Number of blowups must be nonnegative, got {k}!")

    logging.info(f"Enumerating equivariant blowups of CP2 at {k} points ...")
    start_time: float = time()

    workers = workers if workers is not None else max_workers()

    frontier: list[WeightedCircularGraph] = [cp2()]
    for level in range(k):
        if workers > 1:
            with ThreadPoolExecutor(max_workers=workers) as executor:
                children: list[set[WeightedCircularGraph]] = list(executor.map(_canonical_children, frontier))
        else:
            children = [_canonical_children(g) for g in frontier]

        # deduplication is the only merge point
        merged: set[WeightedCircularGraph] = set()
        for c in children:
            merged |= c

        frontier = sorted(merged, key=lambda g: g.weights)
        logging.debug(f"Blowup level {level + 1}: {len(frontier)} canonical graphs.")

    end_time: float = time()
    logging.info(f"Enumeration of {len(frontier)} graphs completed after {(end_time - start_time):.3f}s.")

    return frontier

def graph_to_fan(g: WeightedCircularGraph) -> Fan:
    s: int = g.size
    if s < 3:
        raise GraphError(f"inconsistent weight sequence {g}: at least 3 vertices required")

    if sum(g.weights) != 12 - 3 * s:
        raise GraphError(f"inconsistent weight sequence {g}: weights sum to {sum(g.weights)}, expected {12 - 3 * s}")

    # v_{i+1} = -v_{i-1} - a_i v_i
    rays: list[IntVector] = [(1, 0), (0, 1)]
    for i in range(1, s + 1):
        a: int = g.weights[i % s]
        previous: IntVector = rays[i - 1]
        current: IntVector = rays[i]
        rays.append((-previous[0] - a * current[0], -previous[1] - a * current[1]))

    if rays[s] != rays[0] or rays[s + 1] != rays[1]:
        raise GraphError(f"inconsistent weight sequence {g}: rays do not close up")

    cones: list[tuple[int, int]] = [(i, (i + 1) % s) for i in range(s)]
    try:
        return make_fan(2, rays[:s], cones)
    except FanError as ex:
        raise GraphError(f"inconsistent weight sequence {g}: {ex}")

def _canonical_children(g: WeightedCircularGraph) -> set[WeightedCircularGraph]:
    return {canonical_form(blowup(g, i)) for i in range(1, g.size + 1)}
