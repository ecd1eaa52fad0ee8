from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

from sympy.polys.domains import QQ, ZZ
from sympy.polys.matrices import DomainMatrix

from toricsplit.common.errors import DimensionMismatchError

RationalRows = Sequence[Sequence[Fraction|int]]


def _shape(rows: RationalRows, cols: int|None) -> tuple[int, int]:
    if cols is None:
        cols = len(rows[0]) if len(rows) > 0 else 0

    for row in rows:
        if len(row) != cols:
            raise DimensionMismatchError(f"Row of length {len(row)} in matrix with {cols} columns!")

    return len(rows), cols

def _to_qq(rows: RationalRows, cols: int) -> DomainMatrix:
    elements = [[QQ(Fraction(x).numerator, Fraction(x).denominator) for x in row] for row in rows]
    return DomainMatrix(elements, (len(rows), cols), QQ)

def _from_sympy(element) -> Fraction:
    return Fraction(int(element.p), int(element.q))

def _to_fractions(matrix: DomainMatrix) -> list[list[Fraction]]:
    return [[_from_sympy(x) for x in row] for row in matrix.to_Matrix().tolist()]

def rational_rank(rows: RationalRows, cols: int|None = None) -> int:
    m, n = _shape(rows, cols)
    if m == 0 or n == 0:
        return 0

    return int(_to_qq(rows, n).rank())

def rational_nullspace(rows: RationalRows, cols: int|None = None) -> list[list[Fraction]]:
    """Basis of {x : rows·x = 0} over the rationals, one vector per entry."""

    m, n = _shape(rows, cols)
    if n == 0:
        return []

    if m == 0:
        return [[Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]

    kernel: DomainMatrix = _to_qq(rows, n).nullspace()
    return _to_fractions(kernel)

def rational_inverse(rows: RationalRows) -> list[list[Fraction]]:
    m, n = _shape(rows, None)
    if m != n:
        raise DimensionMismatchError(f"Cannot invert {m}x{n} matrix!")

    if m == 0:
        return []

    inverse: DomainMatrix = _to_qq(rows, n).inv()
    return _to_fractions(inverse)

def integer_determinant(rows: Sequence[Sequence[int]]) -> int:
    m, n = _shape(rows, None)
    if m != n:
        raise DimensionMismatchError(f"Cannot take determinant of {m}x{n} matrix!")

    if m == 0:
        return 1

    return int(DomainMatrix([[ZZ(int(x)) for x in row] for row in rows], (m, n), ZZ).det())

def rational_product(a: RationalRows, b: RationalRows) -> list[list[Fraction]]:
    if len(a) > 0 and len(a[0]) != len(b):
        raise DimensionMismatchError(f"Cannot multiply {len(a)}x{len(a[0])} by {len(b)} rows!")

    cols: int = len(b[0]) if len(b) > 0 else 0
    return [[sum((Fraction(row[k]) * Fraction(b[k][j]) for k in range(len(b))), Fraction(0)) for j in range(cols)] for row in a]

def clear_denominators(vector: Sequence[Fraction]) -> tuple[int, ...]:
    """Scale a rational vector to a primitive integer vector of the same direction."""

    denominator: int = lcm(*[Fraction(x).denominator for x in vector]) if len(vector) > 0 else 1
    scaled: list[int] = [int(Fraction(x) * denominator) for x in vector]

    divisor: int = gcd(*scaled) if len(scaled) > 0 else 0

    if divisor > 1:
        scaled = [x // divisor for x in scaled]

    return tuple(scaled)
