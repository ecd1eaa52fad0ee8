from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

from toricsplit.linear.intmatrix import IntMatrix, IntVector

RationalMatrix = tuple[tuple[Fraction, ...], ...]


@dataclass(frozen=True)
class Fan:
    dim: int
    rays: tuple[IntVector, ...]
    max_cones: tuple[tuple[int, ...], ...]

    @property
    def num_rays(self) -> int:
        return len(self.rays)

    @property
    def num_cones(self) -> int:
        return len(self.max_cones)

    def cone_index(self, ray_indices: tuple[int, ...]|list[int]) -> int:
        key: tuple[int, ...] = tuple(sorted(ray_indices))
        for i, cone in enumerate(self.max_cones):
            if cone == key:
                return i

        raise LookupError(f"No maximal cone with rays {key}!")

@dataclass(frozen=True)
class Wall:
    tau: tuple[int, ...]
    sigma1: int
    sigma2: int
    extra1: int
    extra2: int
    relation: tuple[int, ...]

@dataclass(frozen=True)
class WeightedCircularGraph:
    weights: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.weights)

    def __str__(self) -> str:
        return ','.join(str(a) for a in self.weights)

class DivisorSign(Enum):
    POSITIVE = 'Positive'
    NEF = 'Nef'
    ZERO = 'Zero'
    NEGATIVE = 'Negative'
    MIXED = 'Mixed'

@dataclass(frozen=True)
class AugmentedIntersectionMatrix:
    q: IntMatrix
    row_walls: tuple[Wall, ...]
    col_rays: tuple[int, ...]
    fan: Fan

@dataclass(frozen=True)
class KaneyamaBundleData:
    fan: Fan
    rank: int
    weight_systems: tuple[tuple[IntVector, ...], ...]
    pastings: dict[tuple[int, int], RationalMatrix] = field(default_factory=dict, hash=False)

    def pasting(self, sigma2: int, sigma1: int) -> RationalMatrix:
        if sigma2 == sigma1:
            return tuple(tuple(Fraction(1 if i == j else 0) for j in range(self.rank)) for i in range(self.rank))

        return self.pastings[(sigma2, sigma1)]

@dataclass(frozen=True)
class EulerBundleSpec:
    fan: Fan
    summand_divisors: tuple[IntVector, ...]
    section_exponents: tuple[IntVector, ...]

    @property
    def rank(self) -> int:
        return len(self.summand_divisors) - 1

@dataclass(frozen=True)
class WallBlock:
    stab_weight: IntVector
    chart1_weights: tuple[int, ...]
    chart2_weights: tuple[int, ...]
    pasting: RationalMatrix

@dataclass(frozen=True)
class WallRestriction:
    tau: Wall
    tau_perp: IntVector
    v_sigma1: IntVector
    blocks: tuple[WallBlock, ...]

    @property
    def chart1_weights(self) -> tuple[int, ...]:
        return tuple(w for b in self.blocks for w in b.chart1_weights)

    @property
    def chart2_weights(self) -> tuple[int, ...]:
        return tuple(w for b in self.blocks for w in b.chart2_weights)

@dataclass(frozen=True)
class SplittingSystem:
    tuples: tuple[tuple[int, ...], ...]

    @property
    def rank(self) -> int:
        return len(self.tuples[0]) if len(self.tuples) > 0 else 0

    def twist(self, shifts: tuple[int, ...]|list[int]) -> SplittingSystem:
        if len(shifts) != len(self.tuples):
            raise ValueError(f"Expected {len(self.tuples)} wall shifts, got {len(shifts)}!")

        return SplittingSystem(tuple(tuple(sorted((d + s for d in t), reverse=True)) for t, s in zip(self.tuples, shifts)))

    def __str__(self) -> str:
        return '\n'.join(f"tau({i + 1}): {' '.join(str(d) for d in t)}" for i, t in enumerate(self.tuples))

@dataclass(frozen=True)
class SplittingType:
    permutation_id: int
    r_prime: IntMatrix
    columns: tuple[IntVector, ...]
    canonical: tuple[IntVector, ...]
    sign_classes: tuple[DivisorSign, ...]
