import logging

from time import time

from sympy.utilities.iterables import multiset_permutations

from toricsplit.common.errors import DimensionMismatchError
from toricsplit.linear.hermite import LinearSystem
from toricsplit.linear.intmatrix import IntMatrix, IntVector
from toricsplit.model.types import AugmentedIntersectionMatrix, SplittingSystem, SplittingType
from toricsplit.toric.classes import ClassReducer, class_reducer
from toricsplit.toric.intersection import principal_divisor_columns, sign_of_degrees


class SplittingTypeSolver:
    """Searches line bundle classes X with Q·X = R′ for row permutations R′ of Ξ.

    The default sign rule admits columns whose degrees are all ≥ 0 or all
    < 0. With strict signs only all positive, all zero or all negative
    columns pass.
    """

    def __init__(self, q: AugmentedIntersectionMatrix, strict: bool = False) -> None:
        self._q: AugmentedIntersectionMatrix = q
        self._strict: bool = strict

        # one system per row prefix, the last one is the full matrix
        rows: tuple[IntVector, ...] = q.q.entries
        self._prefix_systems: list[LinearSystem] = [
            LinearSystem(IntMatrix.from_rows(rows[:t + 1], q.q.cols)) for t in range(len(rows))
        ]

        self._reducer: ClassReducer = class_reducer(q.fan)
        self._check_kernel()

    def find(self, xi: SplittingSystem) -> list[SplittingType]:
        num_walls: int = self._q.q.rows
        if len(xi.tuples) != num_walls:
            raise DimensionMismatchError(f"Splitting system has {len(xi.tuples)} walls, intersection matrix {num_walls}!")

        rank: int = xi.rank
        if any(len(t) != rank for t in xi.tuples):
            raise DimensionMismatchError("Splitting tuples of different lengths!")

        logging.info(f"{self.__class__.__name__}: Searching splitting types of rank {rank} over {num_walls} walls ...")
        start_time: float = time()

        # the first row is fixed, which removes column permutations up to repeated entries
        orderings: list[list[tuple[int, ...]]] = [[tuple(xi.tuples[0])]]
        for t in xi.tuples[1:]:
            orderings.append([tuple(p) for p in multiset_permutations(list(t))])

        found: dict[tuple[IntVector, ...], SplittingType] = dict()
        candidates: int = 0

        chosen: list[tuple[int, ...]] = list()
        stack: list[tuple[int, int]] = [(0, 0)]

        # iterative depth-first search: (row, index of next ordering to try)
        while len(stack) > 0:
            row, index = stack.pop()
            del chosen[row:]

            if index >= len(orderings[row]):
                continue

            stack.append((row, index + 1))

            ordering: tuple[int, ...] = orderings[row][index]
            chosen.append(ordering)
            if not self._admissible(chosen, rank):
                chosen.pop()
                continue

            if row + 1 < num_walls:
                stack.append((row + 1, 0))
                continue

            candidates += 1
            splitting_type: SplittingType|None = self._solve(list(chosen), rank, candidates)
            chosen.pop()

            if splitting_type is not None:
                key: tuple[IntVector, ...] = tuple(sorted(splitting_type.canonical, reverse=True))
                found.setdefault(key, splitting_type)

        result: list[SplittingType] = [found[key] for key in sorted(found.keys(), reverse=True)]

        end_time: float = time()
        logging.info(f"{self.__class__.__name__}: Found {len(result)} splitting types among {candidates} admissible permutations, completed after {(end_time - start_time):.3f}s.")

        return result

    def _admissible(self, chosen: list[tuple[int, ...]], rank: int) -> bool:
        system: LinearSystem = self._prefix_systems[len(chosen) - 1]
        for l in range(rank):
            column: tuple[int, ...] = tuple(t[l] for t in chosen)
            if not self._sign_admissible(column):
                return False

            if not system.is_solvable(column):
                return False

        return True

    def _sign_admissible(self, column: tuple[int, ...]) -> bool:
        has_positive: bool = any(d > 0 for d in column)
        has_zero: bool = any(d == 0 for d in column)
        has_negative: bool = any(d < 0 for d in column)

        if self._strict:
            return (int(has_positive) + int(has_zero) + int(has_negative)) <= 1

        return not (has_negative and (has_positive or has_zero))

    def _solve(self, chosen: list[tuple[int, ...]], rank: int, permutation_id: int) -> SplittingType|None:
        r_prime: IntMatrix = IntMatrix.from_rows(chosen, rank)
        solution = self._prefix_systems[-1].solve(r_prime)
        if solution is None:
            return None

        columns: list[IntVector] = solution.solution.columns()
        for column, target in zip(columns, r_prime.columns()):
            if self._q.q.apply(column) != target:
                raise RuntimeError(f"Integral solution {column} does not reproduce {target}!")

        return SplittingType(
            permutation_id,
            r_prime,
            tuple(columns),
            tuple(self._reducer.reduce(c) for c in columns),
            tuple(sign_of_degrees(target) for target in r_prime.columns())
        )

    def _check_kernel(self) -> None:
        kernel: tuple[IntVector, ...] = self._prefix_systems[-1].kernel_basis
        principal: list[IntVector] = principal_divisor_columns(self._q.fan)

        if any(any(x != 0 for x in self._q.q.apply(p)) for p in principal):
            raise RuntimeError(f"Principal divisor columns {principal} are not in the kernel of Q!")

        if len(kernel) != self._q.fan.dim or not all(self._reducer.is_principal(k) for k in kernel):
            raise RuntimeError(f"Kernel of Q {kernel} differs from the principal divisor lattice {principal}!")


def find_splitting_types(q: AugmentedIntersectionMatrix, xi: SplittingSystem, strict: bool = False) -> list[SplittingType]:
    return SplittingTypeSolver(q, strict).find(xi)
