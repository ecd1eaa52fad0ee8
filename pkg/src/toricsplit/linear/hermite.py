from __future__ import annotations

from dataclasses import dataclass

from toricsplit.common.errors import DimensionMismatchError
from toricsplit.linear.intmatrix import IntMatrix, IntVector


@dataclass(frozen=True)
class IntegralSolution:
    solution: IntMatrix
    kernel_basis: tuple[IntVector, ...]


def hnf(a: IntMatrix) -> tuple[IntMatrix, IntMatrix]:
    """Row Hermite normal form of a together with a unimodular transform.

    Returns (H, U) with U·a = H. Pivots of H are positive and every entry
    above a pivot lies in [0, pivot).
    """

    m: int = a.rows
    n: int = a.cols

    h: list[list[int]] = a.to_lists()
    u: list[list[int]] = IntMatrix.identity(m).to_lists()

    pivot_row: int = 0
    for col in range(n):
        if pivot_row >= m:
            break

        # euclidean reduction of the column below the current pivot row
        found: bool = False
        while True:
            nonzero: list[int] = [i for i in range(pivot_row, m) if h[i][col] != 0]
            if len(nonzero) == 0:
                break

            found = True
            k: int = min(nonzero, key=lambda i: (abs(h[i][col]), i))
            if k != pivot_row:
                h[k], h[pivot_row] = h[pivot_row], h[k]
                u[k], u[pivot_row] = u[pivot_row], u[k]

            pivot: int = h[pivot_row][col]
            cleared: bool = True
            for i in range(pivot_row + 1, m):
                q: int = h[i][col] // pivot
                if q != 0:
                    h[i] = [x - q * y for x, y in zip(h[i], h[pivot_row])]
                    u[i] = [x - q * y for x, y in zip(u[i], u[pivot_row])]

                if h[i][col] != 0:
                    cleared = False

            if cleared:
                break

        if not found:
            continue

        if h[pivot_row][col] < 0:
            h[pivot_row] = [-x for x in h[pivot_row]]
            u[pivot_row] = [-x for x in u[pivot_row]]

        # reduce entries above the pivot into [0, pivot)
        pivot = h[pivot_row][col]
        for i in range(pivot_row):
            q = h[i][col] // pivot
            if q != 0:
                h[i] = [x - q * y for x, y in zip(h[i], h[pivot_row])]
                u[i] = [x - q * y for x, y in zip(u[i], u[pivot_row])]

        pivot_row += 1

    return IntMatrix.from_rows(h, n), IntMatrix.from_rows(u, m)


class LinearSystem:
    """Integral solver for A·X = B with a fixed left-hand side A.

    The Hermite form of Aᵀ is computed once, so that many right-hand sides
    can be tested cheaply. With U·Aᵀ = H the substitution X = Uᵀ·Y turns the
    system into Hᵀ·Y = B, which is lower triangular on the pivot rows.
    """

    def __init__(self, a: IntMatrix) -> None:
        self._a: IntMatrix = a

        h, u = hnf(a.transpose())
        self._h: IntMatrix = h
        self._u: IntMatrix = u

        self._pivots: list[int] = list()
        for k in range(h.rows):
            row: tuple[int, ...] = h.row(k)
            pivot_col: int|None = next((i for i, x in enumerate(row) if x != 0), None)
            if pivot_col is None:
                break

            self._pivots.append(pivot_col)

        self.rank: int = len(self._pivots)
        self.kernel_basis: tuple[IntVector, ...] = tuple(u.row(k) for k in range(self.rank, u.rows))

    @property
    def matrix(self) -> IntMatrix:
        return self._a

    def solve_vector(self, b: tuple[int, ...]) -> IntVector|None:
        if len(b) != self._a.rows:
            raise DimensionMismatchError(f"Right-hand side of length {len(b)} for system with {self._a.rows} equations!")

        # forward substitution along the pivots
        y: list[int] = [0] * self._u.rows
        for k, p in enumerate(self._pivots):
            rest: int = b[p] - sum(self._h[j, p] * y[j] for j in range(k))
            q, r = divmod(rest, self._h[k, p])
            if r != 0:
                return None

            y[k] = q

        # remaining equations must hold as well
        for i in range(self._a.rows):
            if sum(self._h[k, i] * y[k] for k in range(self.rank)) != b[i]:
                return None

        return self._u.transpose().apply(y)

    def is_solvable(self, b: tuple[int, ...]) -> bool:
        return self.solve_vector(b) is not None

    def solve(self, b: IntMatrix) -> IntegralSolution|None:
        if b.rows != self._a.rows:
            raise DimensionMismatchError(f"Cannot solve {self._a.rows}x{self._a.cols} system for {b.rows}x{b.cols} right-hand side!")

        columns: list[IntVector] = list()
        for column in b.columns():
            x: IntVector|None = self.solve_vector(column)
            if x is None:
                return None

            columns.append(x)

        return IntegralSolution(IntMatrix.from_columns(columns, self._a.cols), self.kernel_basis)


def solve_integral(a: IntMatrix, b: IntMatrix) -> IntegralSolution|None:
    if a.rows != b.rows:
        raise DimensionMismatchError(f"Cannot solve {a.rows}x{a.cols} system for {b.rows}x{b.cols} right-hand side!")

    return LinearSystem(a).solve(b)
