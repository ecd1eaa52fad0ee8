import logging

from fractions import Fraction
from itertools import permutations
from typing import Mapping, Sequence

from toricsplit.common.errors import BundleDataError
from toricsplit.linear.intmatrix import IntVector
from toricsplit.linear.rational import rational_inverse, rational_product, rational_rank
from toricsplit.model.types import Fan, KaneyamaBundleData, RationalMatrix
from toricsplit.toric.fan import dual_basis, pairing, projective_space_fan, walls


def make_bundle_data(fan: Fan, rank: int, weight_systems: Sequence[Sequence[Sequence[int]]], pastings: Mapping[tuple[int, int], Sequence[Sequence[Fraction|int]]]) -> KaneyamaBundleData:
    """Normalize and validate raw weight systems and pastings.

    Pastings are keyed (sigma2, sigma1) with rows along W_sigma2 and columns
    along W_sigma1. Weights are reordered lexicographically per cone and the
    pastings are permuted along.
    """

    data: KaneyamaBundleData = KaneyamaBundleData(
        fan,
        rank,
        tuple(tuple(tuple(int(x) for x in w) for w in system) for system in weight_systems),
        {key: _to_rational(matrix) for key, matrix in pastings.items()}
    )

    violations: list[str] = validate(data)
    if len(violations) > 0:
        raise BundleDataError(violations)

    return sort_weights(data)

def validate(data: KaneyamaBundleData) -> list[str]:
    """Check shape, net, support and cocycle conditions.

    Returns the list of violations, empty for valid data.
    """

    violations: list[str] = _validate_shape(data)
    if len(violations) > 0:
        return violations

    fan: Fan = data.fan

    # net condition on every wall
    for wall in walls(fan):
        projection1: list[IntVector] = sorted(stab_class(w, wall.tau, fan) for w in data.weight_systems[wall.sigma1])
        projection2: list[IntVector] = sorted(stab_class(w, wall.tau, fan) for w in data.weight_systems[wall.sigma2])
        if projection1 != projection2:
            violations.append(f"net condition violated at wall {_one_based(wall.tau)} between cones {wall.sigma1 + 1} and {wall.sigma2 + 1}")

    # support condition on every ordered pair of cones
    for (sigma2, sigma1), matrix in sorted(data.pastings.items()):
        common: list[int] = sorted(set(fan.max_cones[sigma1]) & set(fan.max_cones[sigma2]))
        for i, row in enumerate(matrix):
            for j, entry in enumerate(row):
                if entry == 0:
                    continue

                difference: IntVector = tuple(a - b for a, b in zip(data.weight_systems[sigma2][i], data.weight_systems[sigma1][j]))
                if any(pairing(difference, fan.rays[k]) < 0 for k in common):
                    violations.append(f"support condition violated by pasting ({sigma2 + 1},{sigma1 + 1}) at entry ({i + 1},{j + 1})")

    # cocycle condition, reduced to products through a fixed base cone
    base: int = 0
    for sigma3 in range(fan.num_cones):
        for sigma1 in range(fan.num_cones):
            product: list[list[Fraction]] = rational_product(data.pasting(sigma3, base), data.pasting(base, sigma1))
            if _to_rational(product) != data.pasting(sigma3, sigma1):
                violations.append(f"cocycle condition violated for cones ({sigma3 + 1},{base + 1},{sigma1 + 1})")

    return violations

def sort_weights(data: KaneyamaBundleData) -> KaneyamaBundleData:
    orders: list[list[int]] = [sorted(range(data.rank), key=lambda i: system[i]) for system in data.weight_systems]

    weight_systems: tuple[tuple[IntVector, ...], ...] = tuple(
        tuple(system[i] for i in order) for system, order in zip(data.weight_systems, orders)
    )

    pastings: dict[tuple[int, int], RationalMatrix] = dict()
    for (sigma2, sigma1), matrix in data.pastings.items():
        pastings[(sigma2, sigma1)] = tuple(
            tuple(matrix[i][j] for j in orders[sigma1]) for i in orders[sigma2]
        )

    return KaneyamaBundleData(data.fan, data.rank, weight_systems, pastings)

def tangent_bundle(fan: Fan) -> KaneyamaBundleData:
    """Tangent bundle: W_sigma is the dual basis of sigma.

    The pasting (sigma2, sigma1) has entries ⟨f^k, v_j⟩ with f the dual
    basis of sigma2 and v_j the rays of sigma1.
    """

    weight_systems: list[list[IntVector]] = [dual_basis(fan, sigma) for sigma in range(fan.num_cones)]

    pastings: dict[tuple[int, int], list[list[int]]] = dict()
    for sigma2 in range(fan.num_cones):
        for sigma1 in range(fan.num_cones):
            if sigma1 == sigma2:
                continue

            pastings[(sigma2, sigma1)] = [
                [pairing(f, fan.rays[j]) for j in fan.max_cones[sigma1]] for f in weight_systems[sigma2]
            ]

    logging.debug(f"Built tangent bundle data on {fan.num_cones} cones.")

    return make_bundle_data(fan, fan.dim, weight_systems, pastings)

def cp2_rank2(a: int, b: int, c: int) -> KaneyamaBundleData:
    if a <= 0 or b <= 0 or c <= 0:
        raise BundleDataError([f"rank 2 bundle parameters must be positive, got ({a},{b},{c})"])

    fan: Fan = projective_space_fan(2)
    sigma1: int = fan.cone_index((0, 1))
    sigma2: int = fan.cone_index((1, 2))
    sigma3: int = fan.cone_index((0, 2))

    weights: dict[int, list[IntVector]] = {
        sigma1: [(a, 0), (0, b)],
        sigma2: [(-b, b), (-c, 0)],
        sigma3: [(a, -a), (0, -c)]
    }

    # off-diagonal entries are forced by the cocycle, each wall still sees the matched diagonal
    p21: list[list[int]] = [[1, 1], [1, 0]]
    p32: list[list[int]] = [[1, 0], [-1, 1]]
    p31: list[list[Fraction]] = rational_product(p32, p21)

    pastings: dict[tuple[int, int], list[list[Fraction|int]]] = {
        (sigma2, sigma1): p21,
        (sigma3, sigma2): p32,
        (sigma3, sigma1): p31
    }

    for (target, source), matrix in list(pastings.items()):
        pastings[(source, target)] = rational_inverse(matrix)

    return make_bundle_data(fan, 2, [weights[sigma] for sigma in range(fan.num_cones)], pastings)

def dual_bundle(data: KaneyamaBundleData) -> KaneyamaBundleData:
    weight_systems: list[list[IntVector]] = [[tuple(-x for x in w) for w in system] for system in data.weight_systems]

    pastings: dict[tuple[int, int], list[list[Fraction]]] = dict()
    for (sigma2, sigma1) in data.pastings.keys():
        inverse: RationalMatrix = data.pasting(sigma1, sigma2)
        pastings[(sigma2, sigma1)] = [list(column) for column in zip(*inverse)]

    return make_bundle_data(data.fan, data.rank, weight_systems, pastings)

def _validate_shape(data: KaneyamaBundleData) -> list[str]:
    fan: Fan = data.fan
    violations: list[str] = list()

    if data.rank < 1:
        violations.append(f"rank must be positive, got {data.rank}")
        return violations

    if len(data.weight_systems) != fan.num_cones:
        violations.append(f"expected {fan.num_cones} weight systems, got {len(data.weight_systems)}")
        return violations

    for sigma, system in enumerate(data.weight_systems):
        if len(system) != data.rank:
            violations.append(f"weight system of cone {sigma + 1} has {len(system)} weights, expected {data.rank}")

        if any(len(w) != fan.dim for w in system):
            violations.append(f"weight system of cone {sigma + 1} contains a weight of wrong dimension")

    for sigma2, sigma1 in permutations(range(fan.num_cones), 2):
        matrix: RationalMatrix|None = data.pastings.get((sigma2, sigma1))
        if matrix is None:
            violations.append(f"pasting ({sigma2 + 1},{sigma1 + 1}) is missing")
            continue

        if len(matrix) != data.rank or any(len(row) != data.rank for row in matrix):
            violations.append(f"pasting ({sigma2 + 1},{sigma1 + 1}) is not {data.rank}x{data.rank}")
        elif rational_rank(matrix, data.rank) != data.rank:
            violations.append(f"pasting ({sigma2 + 1},{sigma1 + 1}) is singular")

    for key in data.pastings.keys():
        sigma2, sigma1 = key
        if sigma2 == sigma1 or not (0 <= sigma2 < fan.num_cones and 0 <= sigma1 < fan.num_cones):
            violations.append(f"pasting ({sigma2 + 1},{sigma1 + 1}) does not connect two distinct cones")

    return violations

def stab_class(weight: Sequence[int], tau: Sequence[int], fan: Fan) -> IntVector:
    # image in M/M(τ), represented by the pairings with the rays of τ
    return tuple(pairing(weight, fan.rays[k]) for k in tau)

def _to_rational(matrix: Sequence[Sequence[Fraction|int]]) -> RationalMatrix:
    return tuple(tuple(Fraction(x) for x in row) for row in matrix)

def _one_based(indices: Sequence[int]) -> tuple[int, ...]:
    return tuple(i + 1 for i in indices)
