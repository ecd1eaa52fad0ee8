from typing import Sequence

from toricsplit.common.errors import DimensionMismatchError
from toricsplit.linear.intmatrix import IntMatrix, IntVector
from toricsplit.model.types import AugmentedIntersectionMatrix, DivisorSign, Fan, Wall
from toricsplit.toric.fan import pairing, walls


def augmented_matrix(fan: Fan) -> AugmentedIntersectionMatrix:
    """Intersection numbers V(τ_i)·D(v_j), one row per wall.

    Row i carries the wall relation: a_k at the wall's own rays, 1 at the
    two extra rays.
    """

    fan_walls: list[Wall] = walls(fan)

    rows: list[list[int]] = list()
    for wall in fan_walls:
        row: list[int] = [0] * fan.num_rays
        for k, a in zip(wall.tau, wall.relation):
            row[k] = a

        row[wall.extra1] = 1
        row[wall.extra2] = 1
        rows.append(row)

    return AugmentedIntersectionMatrix(
        IntMatrix.from_rows(rows, fan.num_rays),
        tuple(fan_walls),
        tuple(range(fan.num_rays)),
        fan
    )

def sign_of_class(q: IntMatrix|AugmentedIntersectionMatrix, x: Sequence[int]) -> DivisorSign:
    matrix: IntMatrix = q.q if isinstance(q, AugmentedIntersectionMatrix) else q
    if len(x) != matrix.cols:
        raise DimensionMismatchError(f"Class with {len(x)} entries for intersection matrix with {matrix.cols} columns!")

    return sign_of_degrees(matrix.apply(x))

def sign_of_degrees(degrees: Sequence[int]) -> DivisorSign:
    if all(d == 0 for d in degrees):
        return DivisorSign.ZERO
    elif all(d > 0 for d in degrees):
        return DivisorSign.POSITIVE
    elif all(d >= 0 for d in degrees):
        return DivisorSign.NEF
    elif all(d < 0 for d in degrees):
        return DivisorSign.NEGATIVE
    else:
        return DivisorSign.MIXED

def principal_divisor_columns(fan: Fan) -> list[IntVector]:
    # image of the standard basis of M under m ↦ (⟨m, v_1⟩, …, ⟨m, v_J⟩)
    basis: list[IntVector] = [tuple(1 if i == j else 0 for j in range(fan.dim)) for i in range(fan.dim)]
    return [tuple(pairing(m, v) for v in fan.rays) for m in basis]

def restriction_degrees(q: AugmentedIntersectionMatrix, x: Sequence[int]) -> tuple[int, ...]:
    return q.q.apply(x)

def anticanonical_degree(q: AugmentedIntersectionMatrix) -> int:
    """Self-intersection of the anticanonical class of a surface.

    For surfaces walls and rays coincide, so (Σ D_i)² is the sum of Q's row
    sums.
    """

    if q.fan.dim != 2:
        raise DimensionMismatchError(f"Anticanonical degree is computed for surfaces only, got dimension {q.fan.dim}!")

    return sum(sum(row) for row in q.q.entries)
