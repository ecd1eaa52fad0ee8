import logging

from fractions import Fraction
from typing import Sequence

from toricsplit.common.errors import DimensionMismatchError, SingularMatrixError
from toricsplit.linear.rational import clear_denominators, rational_nullspace, rational_rank


def bootstrap(chart1_weights: Sequence[int], chart2_weights: Sequence[int], pasting: Sequence[Sequence[Fraction|int]]) -> tuple[int, ...]:
    """Splitting numbers of one weight block on P¹, sorted non-increasing.

    The pasting has rows along the chart-2 weights and columns along the
    chart-1 weights. Each round splits off a line subbundle of maximal
    degree χ₁ − χ₂ and continues on the quotient.
    """

    rank: int = len(chart1_weights)
    if len(chart2_weights) != rank or len(pasting) != rank or any(len(row) != rank for row in pasting):
        raise DimensionMismatchError(f"Weight block needs {rank} weights per chart and a {rank}x{rank} pasting!")

    a: list[list[Fraction]] = [[Fraction(x) for x in row] for row in pasting]
    if rational_rank(a, rank) != rank:
        raise SingularMatrixError("Pasting matrix of weight block is singular!")

    chi1: list[int] = [int(x) for x in chart1_weights]
    chi2: list[int] = [int(x) for x in chart2_weights]

    degrees: list[int] = list()
    while len(chi1) > 1:
        degree, chi1, chi2, a = _split_off(chi1, chi2, a)
        degrees.append(degree)

    if len(chi1) == 1:
        degrees.append(chi1[0] - chi2[0])

    return tuple(sorted(degrees, reverse=True))

def _split_off(chi1: list[int], chi2: list[int], a: list[list[Fraction]]) -> tuple[int, list[int], list[int], list[list[Fraction]]]:
    rank: int = len(chi1)

    # candidate degrees x1 - x2 in decreasing order
    candidates: list[tuple[int, int]] = sorted(
        {(x1, x2) for x1 in chi1 for x2 in chi2},
        key=lambda p: (-(p[0] - p[1]), -p[0])
    )

    for x1, x2 in candidates:
        rows: list[int] = [l for l in range(rank) if chi2[l] > x2]
        columns: list[int] = [k for k in range(rank) if chi1[k] >= x1]

        # sections of weight x1 on chart 1 whose image stays regular on chart 2
        kernel: list[list[Fraction]] = rational_nullspace([[a[l][k] for k in columns] for l in rows], len(columns))
        if len(kernel) == 0:
            continue

        witness: list[Fraction] = next(
            (vector for vector in kernel if any(vector[p] != 0 and chi1[k] == x1 for p, k in enumerate(columns))),
            kernel[0]
        )

        scaled: tuple[int, ...] = clear_denominators(witness)

        c: list[Fraction] = [Fraction(0)] * rank
        for p, k in enumerate(columns):
            c[k] = Fraction(scaled[p])

        w: list[Fraction] = [sum((a[l][k] * c[k] for k in range(rank)), Fraction(0)) for l in range(rank)]

        k0: int|None = next((k for k in range(rank) if chi1[k] == x1 and c[k] != 0), None)
        l0: int|None = next((l for l in range(rank) if chi2[l] == x2 and w[l] != 0), None)
        if k0 is None or l0 is None:
            raise RuntimeError(f"Degree {x1 - x2} witness {c} does not reach the strata ({x1}, {x2})!")

        # quotient by the line spanned by (c, w): drop k0 and l0, project the remaining columns
        deflated: list[list[Fraction]] = [
            [a[l][k] - (a[l0][k] / w[l0]) * w[l] for k in range(rank) if k != k0]
            for l in range(rank) if l != l0
        ]

        logging.debug(f"Split off line subbundle of degree {x1 - x2} from rank {rank} block.")

        return (
            x1 - x2,
            [x for k, x in enumerate(chi1) if k != k0],
            [x for l, x in enumerate(chi2) if l != l0],
            deflated
        )

    raise SingularMatrixError("No line subbundle found, pasting matrix is singular!")
