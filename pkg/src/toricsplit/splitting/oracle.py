import logging

from collections import defaultdict
from fractions import Fraction
from typing import Sequence

from sympy import Matrix, Poly, Rational, Symbol, expand

from toricsplit.common.env import get_int
from toricsplit.common.errors import DimensionMismatchError, OracleWindowError, SingularMatrixError
from toricsplit.linear.rational import rational_inverse, rational_rank

# entry of a transition matrix: exponent of z ↦ coefficient
LaurentPolynomial = dict[int, Fraction]
LaurentMatrix = Sequence[Sequence[LaurentPolynomial]]


def monomial(coefficient: Fraction|int, exponent: int) -> LaurentPolynomial:
    return {exponent: Fraction(coefficient)} if coefficient != 0 else {}

def transition_matrix(chart1_weights: Sequence[int], chart2_weights: Sequence[int], pasting: Sequence[Sequence[Fraction|int]]) -> list[list[LaurentPolynomial]]:
    """Transition T with s₁ = T·s₂ for a weight block.

    T = diag(z^χ₁)·A⁻¹·diag(z^-χ₂) where A is the block pasting.
    """

    inverse: list[list[Fraction]] = rational_inverse(pasting)
    return [
        [monomial(inverse[i][j], chart1_weights[i] - chart2_weights[j]) for j in range(len(chart2_weights))]
        for i in range(len(chart1_weights))
    ]

def h0_oracle(transition: LaurentMatrix, max_retries: int|None = None) -> tuple[int, ...]:
    """Splitting numbers of the bundle on P¹ glued by s₁ = T·s₂.

    s₁ is polynomial in z and s₂ polynomial in 1/z. Degrees are read off
    the jumps of h⁰(E(k)) over a window of twists. Every degree lies in
    [-max exponent of T⁻¹, max exponent of T], the window is only widened
    further if the multiplicities do not add up to the rank and the degree
    of det T.
    """

    rank: int = len(transition)
    if any(len(row) != rank for row in transition):
        raise DimensionMismatchError(f"Transition matrix must be square, got {rank} rows of varying length!")

    exponents: list[int] = _exponents(transition)
    if len(exponents) == 0:
        raise SingularMatrixError("Transition matrix is zero!")

    determinant_degree, inverse_exponents = _inverse_exponents(transition, min(exponents))
    inverse_low: int = min(inverse_exponents)

    high: int = max(exponents)
    low: int = -max(inverse_exponents)

    retries: int = max_retries if max_retries is not None else get_int('TSP_ORACLE_MAX_RETRIES', 4)
    for attempt in range(retries + 1):
        degrees: list[int]|None = _degrees_in_window(transition, low, high, inverse_low)
        if degrees is not None and len(degrees) == rank and sum(degrees) == determinant_degree:
            return tuple(sorted(degrees, reverse=True))

        logging.debug(f"Degree window [{low}, {high}] too narrow, widening (attempt {attempt + 1}).")
        low -= 1
        high += 1

    raise OracleWindowError(f"Splitting numbers not found within {retries} window enlargements, last window [{low}, {high}]!")

def section_count(transition: LaurentMatrix, twist: int, max_degree: int) -> int:
    """dim {s₂ ∈ C[1/z]^r of degree ≤ max_degree : z^twist·T·s₂ ∈ C[z]^r}."""

    if max_degree < 0:
        return 0

    rank: int = len(transition)
    width: int = max_degree + 1

    # one equation per component and negative power of z
    equations: dict[tuple[int, int], dict[int, Fraction]] = defaultdict(lambda: defaultdict(Fraction))
    for i in range(rank):
        for l in range(rank):
            for p, c in transition[i][l].items():
                if c == 0:
                    continue

                for e in range(width):
                    power: int = twist + p - e
                    if power < 0:
                        equations[(i, power)][l * width + e] += c

    unknowns: int = rank * width
    rows: list[list[Fraction]] = [
        [coefficients.get(col, Fraction(0)) for col in range(unknowns)] for coefficients in equations.values()
    ]

    return unknowns - rational_rank(rows, unknowns)

def _exponents(transition: LaurentMatrix) -> list[int]:
    return [e for row in transition for entry in row for e, c in entry.items() if c != 0]

def _degrees_in_window(transition: LaurentMatrix, low: int, high: int, inverse_low: int) -> list[int]|None:

    # s₂ = z^-k·T⁻¹·s₁ with s₁ polynomial in z bounds the 1/z-degree of s₂ by k - inverse_low
    counts: dict[int, int] = {
        k: section_count(transition, k, k - inverse_low) for k in range(-high - 2, -low + 1)
    }
    jumps: dict[int, int] = {k: counts[k] - counts[k - 1] for k in range(-high - 1, -low + 1)}

    degrees: list[int] = list()
    for d in range(low, high + 1):
        multiplicity: int = jumps[-d] - jumps[-d - 1]
        if multiplicity < 0:
            return None

        degrees.extend([d] * multiplicity)

    return degrees

def _inverse_exponents(transition: LaurentMatrix, low: int) -> tuple[int, list[int]]:
    """Degree of det T and the exponents occurring in T⁻¹."""

    z: Symbol = Symbol('z')
    rank: int = len(transition)
    shift: int = max(0, -low)

    # P = z^shift·T is polynomial, T⁻¹ = z^shift·adj(P)/det(P)
    polynomial_matrix: Matrix = Matrix(rank, rank, lambda i, j: sum(
        (Rational(c.numerator, c.denominator) * z ** (e + shift) for e, c in transition[i][j].items()),
        Rational(0)
    ))

    terms: list = [(m, c) for m, c in Poly(expand(polynomial_matrix.det()), z).terms() if c != 0]
    if len(terms) != 1:
        raise SingularMatrixError("Transition matrix is not invertible over Laurent polynomials!")

    determinant_exponent: int = terms[0][0][0]

    inverse_exponents: list[int] = list()
    for entry in polynomial_matrix.adjugate():
        inverse_exponents.extend(
            m[0] + shift - determinant_exponent for m, c in Poly(expand(entry), z).terms() if c != 0
        )

    return determinant_exponent - rank * shift, inverse_exponents
