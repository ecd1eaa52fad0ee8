from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from toricsplit.common.errors import DimensionMismatchError

IntVector = tuple[int, ...]


@dataclass(frozen=True)
class IntMatrix:
    """Immutable integer matrix, stored row-major as nested tuples.

    The column count is kept explicitly so that matrices without rows still
    carry their shape.
    """

    entries: tuple[IntVector, ...]
    cols: int

    def __post_init__(self) -> None:
        if self.cols < 0:
            raise DimensionMismatchError(f"Negative column count {self.cols}!")

        for row in self.entries:
            if len(row) != self.cols:
                raise DimensionMismatchError(f"Row of length {len(row)} in matrix with {self.cols} columns!")

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]], cols: int|None = None) -> IntMatrix:
        entries: tuple[IntVector, ...] = tuple(tuple(int(x) for x in row) for row in rows)
        if cols is None:
            if len(entries) == 0:
                raise DimensionMismatchError("Column count required for a matrix without rows!")

            cols = len(entries[0])

        return cls(entries, cols)

    @classmethod
    def from_columns(cls, columns: Iterable[Sequence[int]], rows: int|None = None) -> IntMatrix:
        columns = [tuple(int(x) for x in c) for c in columns]
        if rows is None:
            if len(columns) == 0:
                raise DimensionMismatchError("Row count required for a matrix without columns!")

            rows = len(columns[0])

        return cls(tuple(tuple(c[i] for c in columns) for i in range(rows)), len(columns))

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls(tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)), n)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> IntMatrix:
        return cls(tuple((0,) * cols for _ in range(rows)), cols)

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, index: tuple[int, int]) -> int:
        i, j = index
        return self.entries[i][j]

    def row(self, i: int) -> IntVector:
        return self.entries[i]

    def column(self, j: int) -> IntVector:
        return tuple(row[j] for row in self.entries)

    def columns(self) -> list[IntVector]:
        return [self.column(j) for j in range(self.cols)]

    def transpose(self) -> IntMatrix:
        return IntMatrix(tuple(self.column(j) for j in range(self.cols)), self.rows)

    def apply(self, vector: Sequence[int]) -> IntVector:
        if len(vector) != self.cols:
            raise DimensionMismatchError(f"Cannot apply {self.rows}x{self.cols} matrix to vector of length {len(vector)}!")

        return tuple(sum(a * b for a, b in zip(row, vector)) for row in self.entries)

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if self.cols != other.rows:
            raise DimensionMismatchError(f"Cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}!")

        other_columns: list[IntVector] = other.columns()
        return IntMatrix(
            tuple(tuple(sum(a * b for a, b in zip(row, c)) for c in other_columns) for row in self.entries),
            other.cols
        )

    def to_lists(self) -> list[list[int]]:
        return [list(row) for row in self.entries]
