from collections import defaultdict
from typing import Sequence

from toricsplit.bundle.bundledata import stab_class
from toricsplit.common.errors import BundleDataError, SingularMatrixError
from toricsplit.linear.hermite import LinearSystem
from toricsplit.linear.intmatrix import IntMatrix, IntVector
from toricsplit.linear.rational import rational_rank
from toricsplit.model.types import Fan, KaneyamaBundleData, RationalMatrix, Wall, WallBlock, WallRestriction
from toricsplit.toric.fan import dual_basis, pairing


def tau_perp(fan: Fan, wall: Wall) -> IntVector:
    # generator of σ₁^∨ ∩ τ^⊥: the dual basis vector of σ₁ belonging to its extra ray
    cone: tuple[int, ...] = fan.max_cones[wall.sigma1]
    return dual_basis(fan, wall.sigma1)[cone.index(wall.extra1)]

def default_v_sigma1(fan: Fan, wall: Wall) -> IntVector:
    perp: IntVector = tau_perp(fan, wall)

    v: IntVector|None = LinearSystem(IntMatrix.from_rows([perp], fan.dim)).solve_vector((1,))
    if v is None:
        raise BundleDataError([f"no lattice vector pairs to 1 with {perp}"])

    return v

def restrict(data: KaneyamaBundleData, wall: Wall, v_sigma1: Sequence[int]|None = None) -> WallRestriction:
    """Restrict the bundle to the invariant line V(τ) of a wall.

    Weights are grouped by their class in M/M(τ); each block carries the
    T¹-weights ⟨χ, v_σ₁⟩ of both charts and the surviving part of the
    pasting P(σ₂, σ₁).
    """

    fan: Fan = data.fan
    perp: IntVector = tau_perp(fan, wall)

    v: IntVector = tuple(v_sigma1) if v_sigma1 is not None else default_v_sigma1(fan, wall)
    if pairing(perp, v) != 1:
        raise BundleDataError([f"vector {v} does not pair to 1 with {perp} at wall {_one_based(wall.tau)}"])

    weights1: tuple[IntVector, ...] = data.weight_systems[wall.sigma1]
    weights2: tuple[IntVector, ...] = data.weight_systems[wall.sigma2]
    pasting: RationalMatrix = data.pasting(wall.sigma2, wall.sigma1)

    classes1: list[IntVector] = [stab_class(w, wall.tau, fan) for w in weights1]
    classes2: list[IntVector] = [stab_class(w, wall.tau, fan) for w in weights2]

    # off-block entries vanish in the limit z → 0 when their weight difference pairs positively
    for i, row in enumerate(pasting):
        for j, entry in enumerate(row):
            if entry == 0 or classes2[i] == classes1[j]:
                continue

            difference: IntVector = tuple(a - b for a, b in zip(classes2[i], classes1[j]))
            if any(x < 0 for x in difference):
                raise BundleDataError([f"pasting entry ({i + 1},{j + 1}) at wall {_one_based(wall.tau)} does not vanish in the limit"])

    members1: dict[IntVector, list[int]] = defaultdict(list)
    members2: dict[IntVector, list[int]] = defaultdict(list)
    for j, c in enumerate(classes1):
        members1[c].append(j)

    for i, c in enumerate(classes2):
        members2[c].append(i)

    t1: list[int] = [pairing(w, v) for w in weights1]
    t2: list[int] = [pairing(w, v) for w in weights2]

    blocks: list[WallBlock] = list()
    for c in sorted(members1.keys()):
        columns: list[int] = sorted(members1[c], key=lambda j: (-t1[j], j))
        rows: list[int] = sorted(members2.get(c, []), key=lambda i: (t2[i], i))
        if len(rows) != len(columns):
            raise BundleDataError([f"net condition violated at wall {_one_based(wall.tau)}"])

        block_pasting: RationalMatrix = tuple(tuple(pasting[i][j] for j in columns) for i in rows)
        if rational_rank(block_pasting, len(columns)) != len(columns):
            raise SingularMatrixError(f"Pasting block {c} at wall {_one_based(wall.tau)} is singular!")

        blocks.append(WallBlock(
            c,
            tuple(t1[j] for j in columns),
            tuple(t2[i] for i in rows),
            block_pasting
        ))

    return WallRestriction(wall, perp, v, tuple(blocks))

def weight_difference_total(restriction: WallRestriction) -> int:
    return sum(restriction.chart1_weights) - sum(restriction.chart2_weights)

def _one_based(indices: Sequence[int]) -> tuple[int, ...]:
    return tuple(i + 1 for i in indices)
