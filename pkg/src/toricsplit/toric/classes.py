from functools import lru_cache
from itertools import combinations
from typing import Sequence

from toricsplit.common.errors import DimensionMismatchError, FanError
from toricsplit.linear.hermite import LinearSystem
from toricsplit.linear.intmatrix import IntMatrix, IntVector
from toricsplit.linear.rational import integer_determinant
from toricsplit.model.types import Fan
from toricsplit.toric.fan import pairing


class ClassReducer:
    """Reduces ray-coefficient columns modulo the principal divisor lattice.

    A fixed unimodular set S of n rays is chosen, the last n rays when they
    form a basis of N and otherwise the lexicographically first such set.
    The representative of a class is the unique one vanishing on S.
    """

    def __init__(self, fan: Fan) -> None:
        self._fan: Fan = fan
        self.reference_rays: tuple[int, ...] = self._choose_reference_rays()

        # V_S·m = x_S determines the character m to subtract
        self._system: LinearSystem = LinearSystem(
            IntMatrix.from_rows([fan.rays[j] for j in self.reference_rays], fan.dim)
        )

    def reduce(self, x: Sequence[int]) -> IntVector:
        if len(x) != self._fan.num_rays:
            raise DimensionMismatchError(f"Class with {len(x)} entries on a fan with {self._fan.num_rays} rays!")

        m: IntVector|None = self._system.solve_vector(tuple(x[j] for j in self.reference_rays))
        if m is None:
            raise FanError("Reference rays are not a lattice basis!")

        return tuple(int(x_k) - pairing(m, v) for x_k, v in zip(x, self._fan.rays))

    def is_principal(self, x: Sequence[int]) -> bool:
        return all(c == 0 for c in self.reduce(x))

    def _choose_reference_rays(self) -> tuple[int, ...]:
        n: int = self._fan.dim
        last: tuple[int, ...] = tuple(range(self._fan.num_rays - n, self._fan.num_rays))

        candidates: list[tuple[int, ...]] = [last] + list(combinations(range(self._fan.num_rays), n))
        for subset in candidates:
            if abs(integer_determinant([self._fan.rays[j] for j in subset])) == 1:
                return subset

        raise FanError("Fan has no unimodular set of rays!")


@lru_cache(maxsize=256)
def class_reducer(fan: Fan) -> ClassReducer:
    return ClassReducer(fan)

def canonical_class_rep(x: Sequence[int], fan: Fan) -> IntVector:
    return class_reducer(fan).reduce(x)
