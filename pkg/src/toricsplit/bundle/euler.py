import logging

from typing import Sequence

from toricsplit.common.errors import BundleDataError, DimensionMismatchError, ScopeError
from toricsplit.linear.intmatrix import IntVector
from toricsplit.model.types import AugmentedIntersectionMatrix, EulerBundleSpec, Fan, SplittingSystem, Wall
from toricsplit.toric.classes import class_reducer


def make_euler_spec(fan: Fan, summand_divisors: Sequence[Sequence[int]], section_exponents: Sequence[Sequence[int]]) -> EulerBundleSpec:
    """Bundle E given by 0 → O → ⊕ O(D_i) → E → 0 with monomial sections."""

    if len(summand_divisors) < 2:
        raise BundleDataError([f"at least two summands are required, got {len(summand_divisors)}"])

    if len(section_exponents) != len(summand_divisors):
        raise DimensionMismatchError(f"Got {len(section_exponents)} sections for {len(summand_divisors)} summands!")

    divisors: tuple[IntVector, ...] = tuple(tuple(int(x) for x in d) for d in summand_divisors)
    exponents: tuple[IntVector, ...] = tuple(tuple(int(x) for x in e) for e in section_exponents)

    violations: list[str] = list()
    for i, (d, e) in enumerate(zip(divisors, exponents)):
        if len(d) != fan.num_rays or len(e) != fan.num_rays:
            raise DimensionMismatchError(f"Summand {i + 1} needs {fan.num_rays} divisor and exponent entries!")

        if any(x < 0 for x in e):
            violations.append(f"section of summand {i + 1} has a negative exponent")
            continue

        # the monomial has to be a section of O(D_i), i.e. linearly equivalent to D_i
        if not class_reducer(fan).is_principal(tuple(a - b for a, b in zip(e, d))):
            violations.append(f"section of summand {i + 1} is not a section of its divisor")

    if len(violations) > 0:
        raise BundleDataError(violations)

    return EulerBundleSpec(fan, divisors, exponents)

def euler_bundle(fan: Fan, multiplicities: Sequence[int]) -> EulerBundleSpec:
    """Summands m_i·D(v_i) with sections z_i^{m_i}, one per ray."""

    if len(multiplicities) != fan.num_rays:
        raise DimensionMismatchError(f"Expected {fan.num_rays} multiplicities, got {len(multiplicities)}!")

    columns: list[IntVector] = [tuple(m if j == i else 0 for j in range(fan.num_rays)) for i, m in enumerate(multiplicities)]

    return make_euler_spec(fan, columns, columns)

def euler_splitting_system(spec: EulerBundleSpec, q: AugmentedIntersectionMatrix) -> SplittingSystem:
    if q.fan != spec.fan:
        raise DimensionMismatchError("Intersection matrix and Euler bundle live on different fans!")

    tuples: list[tuple[int, ...]] = list()
    for row, wall in zip(q.q.entries, q.row_walls):
        tuples.append(_wall_degrees(spec, row, wall))

    return SplittingSystem(tuple(tuples))

def _wall_degrees(spec: EulerBundleSpec, row: Sequence[int], wall: Wall) -> tuple[int, ...]:
    degrees: list[int] = [sum(a * b for a, b in zip(row, d)) for d in spec.summand_divisors]

    # sections with a positive exponent on a ray of the wall vanish on V(τ)
    nonvanishing: list[int] = [
        i for i, e in enumerate(spec.section_exponents) if all(e[k] == 0 for k in wall.tau)
    ]

    # no zero on V(τ) at all: the sequence splits off a trivial summand
    constants: list[int] = [
        i for i in nonvanishing if spec.section_exponents[i][wall.extra1] == 0 and spec.section_exponents[i][wall.extra2] == 0
    ]

    if len(constants) > 0:
        deleted: int = constants[0]
        result: list[int] = [d for i, d in enumerate(degrees) if i != deleted]

        logging.debug(f"Wall {wall.tau}: section {deleted + 1} is a nonvanishing constant.")

        return tuple(sorted(result, reverse=True))

    # two pure powers of the two fixed-point coordinates have no common zero
    if len(nonvanishing) == 2:
        first, second = nonvanishing
        first_extra: int|None = _pure_power_of(spec.section_exponents[first], wall)
        second_extra: int|None = _pure_power_of(spec.section_exponents[second], wall)

        if first_extra is not None and second_extra is not None and first_extra != second_extra:
            result = [d for i, d in enumerate(degrees) if i not in nonvanishing]
            result.append(degrees[first] + degrees[second])

            return tuple(sorted(result, reverse=True))

    raise ScopeError(f"η restriction not in scope at wall {tuple(k + 1 for k in wall.tau)}")

def _pure_power_of(exponents: Sequence[int], wall: Wall) -> int|None:
    on_extra1: bool = exponents[wall.extra1] > 0
    on_extra2: bool = exponents[wall.extra2] > 0

    if on_extra1 and not on_extra2:
        return wall.extra1
    elif on_extra2 and not on_extra1:
        return wall.extra2
    else:
        return None
