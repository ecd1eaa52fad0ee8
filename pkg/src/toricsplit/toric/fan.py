import logging

from collections import defaultdict
from functools import lru_cache
from itertools import combinations
from math import gcd
from typing import Sequence

from toricsplit.common.errors import DimensionMismatchError, FanError
from toricsplit.linear.hermite import solve_integral
from toricsplit.linear.intmatrix import IntMatrix, IntVector
from toricsplit.linear.rational import integer_determinant
from toricsplit.model.types import Fan, Wall


def pairing(m: Sequence[int], v: Sequence[int]) -> int:
    return sum(a * b for a, b in zip(m, v))

def make_fan(n: int, rays: Sequence[Sequence[int]], max_cones: Sequence[Sequence[int]]) -> Fan:
    """Validate raw ray and cone data of a complete nonsingular fan.

    Ray and cone order are kept as given; ray indices inside a cone are
    sorted.
    """

    if n < 1:
        raise FanError(f"Fan dimension must be positive, got {n}!")

    ray_tuples: list[IntVector] = list()
    for j, ray in enumerate(rays):
        if len(ray) != n:
            raise DimensionMismatchError(f"Ray {j + 1} has {len(ray)} coordinates in a fan of dimension {n}!")

        ray = tuple(int(x) for x in ray)
        if gcd(*ray) != 1:
            raise FanError(f"Ray {j + 1} {ray} is not primitive!")

        if ray in ray_tuples:
            raise FanError(f"Ray {j + 1} {ray} is listed twice!")

        ray_tuples.append(ray)

    cone_tuples: list[tuple[int, ...]] = list()
    for c, cone in enumerate(max_cones):
        indices: tuple[int, ...] = tuple(sorted(int(i) for i in cone))
        if len(indices) != n or len(set(indices)) != n:
            raise FanError(f"Cone {c + 1} must consist of {n} distinct rays!")

        if any(i < 0 or i >= len(ray_tuples) for i in indices):
            raise FanError(f"Cone {c + 1} refers to an unknown ray!")

        if indices in cone_tuples:
            raise FanError(f"Cone {c + 1} is listed twice!")

        determinant: int = integer_determinant([ray_tuples[i] for i in indices])
        if abs(determinant) != 1:
            raise FanError(f"Cone {c + 1} is not unimodular (det = {determinant}), the fan is not smooth!")

        cone_tuples.append(indices)

    fan: Fan = Fan(n, tuple(ray_tuples), tuple(cone_tuples))

    # every facet of every maximal cone has to be shared by exactly two maximal cones
    facets: dict[tuple[int, ...], list[int]] = _facet_map(fan)
    for facet, cones in facets.items():
        if len(cones) != 2:
            raise FanError(f"Facet {_one_based(facet)} lies in {len(cones)} maximal cones, the fan is not complete!")

        sigma1, sigma2 = cones
        extra1: int = _extra_ray(fan.max_cones[sigma1], facet)
        extra2: int = _extra_ray(fan.max_cones[sigma2], facet)

        # the two extra rays have to lie on opposite sides of the facet
        coefficient: int = pairing(dual_basis(fan, sigma1)[fan.max_cones[sigma1].index(extra1)], fan.rays[extra2])
        if coefficient != -1:
            raise FanError(f"Cones {sigma1 + 1} and {sigma2 + 1} overlap across facet {_one_based(facet)}!")

    # a generic point has to lie in exactly one maximal cone
    covering: int = _covering_degree(fan)
    if covering != 1:
        raise FanError(f"Maximal cones cover a generic point {covering} times, cones overlap!")

    return fan

def dual_basis(fan: Fan, sigma: int) -> list[IntVector]:
    return list(_dual_bases(fan)[sigma])

def walls(fan: Fan) -> list[Wall]:
    return list(_walls(fan))

def projective_space_fan(n: int) -> Fan:
    if n < 1:
        raise FanError(f"Projective space dimension must be positive, got {n}!")

    rays: list[IntVector] = [tuple(1 if i == j else 0 for j in range(n)) for i in range(n)]
    rays.append(tuple(-1 for _ in range(n)))

    return make_fan(n, rays, list(combinations(range(n + 1), n)))

@lru_cache(maxsize=256)
def _dual_bases(fan: Fan) -> tuple[tuple[IntVector, ...], ...]:
    result: list[tuple[IntVector, ...]] = list()
    for cone in fan.max_cones:

        # rows eⁱ solve ⟨eⁱ, v_j⟩ = δ_ij, i.e. Vᵀ·Eᵀ = 1 with V holding the rays as columns
        ray_columns: IntMatrix = IntMatrix.from_columns([fan.rays[j] for j in cone], fan.dim)
        solution = solve_integral(ray_columns.transpose(), IntMatrix.identity(fan.dim))
        if solution is None:
            raise FanError(f"Cone {_one_based(cone)} has no integral dual basis!")

        result.append(tuple(solution.solution.columns()))

    return tuple(result)

@lru_cache(maxsize=256)
def _walls(fan: Fan) -> tuple[Wall, ...]:
    result: list[Wall] = list()
    for facet, cones in sorted(_facet_map(fan).items()):
        sigma1, sigma2 = sorted(cones)
        extra1: int = _extra_ray(fan.max_cones[sigma1], facet)
        extra2: int = _extra_ray(fan.max_cones[sigma2], facet)

        basis: list[IntVector] = dual_basis(fan, sigma1)
        extra_sum: IntVector = tuple(a + b for a, b in zip(fan.rays[extra1], fan.rays[extra2]))
        relation: tuple[int, ...] = tuple(-pairing(basis[fan.max_cones[sigma1].index(k)], extra_sum) for k in facet)

        # v_extra1 + v_extra2 + Σ a_k v_k = 0
        check: list[int] = list(extra_sum)
        for a, k in zip(relation, facet):
            check = [x + a * y for x, y in zip(check, fan.rays[k])]

        if any(x != 0 for x in check):
            raise FanError(f"Wall {_one_based(facet)} has no integral relation!")

        result.append(Wall(facet, sigma1, sigma2, extra1, extra2, relation))

    logging.debug(f"Extracted {len(result)} walls from fan with {fan.num_rays} rays.")

    return tuple(result)

def _facet_map(fan: Fan) -> dict[tuple[int, ...], list[int]]:
    facets: dict[tuple[int, ...], list[int]] = defaultdict(list)
    for c, cone in enumerate(fan.max_cones):
        for facet in combinations(cone, fan.dim - 1):
            facets[facet].append(c)

    return dict(facets)

def _extra_ray(cone: tuple[int, ...], facet: tuple[int, ...]) -> int:
    return next(j for j in cone if j not in facet)

def _covering_degree(fan: Fan) -> int:
    bases: tuple[tuple[IntVector, ...], ...] = _dual_bases(fan)
    bound: int = max(abs(x) for basis in bases for e in basis for x in e)

    # (1, N, N², …) pairs nonzero with every dual basis vector once N exceeds the entries
    base: int = 2 * bound + 2
    point: IntVector = tuple(base ** i for i in range(fan.dim))

    return sum(1 for basis in bases if all(pairing(e, point) > 0 for e in basis))

def _one_based(indices: Sequence[int]) -> tuple[int, ...]:
    return tuple(i + 1 for i in indices)
