"""Seeded random instances for tests and the generate command.

All draws go through random.Random(seed), so a (seed, size, count) triple
always yields the same problems, byte for byte.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Optional

from .divisor import CurveConfiguration, Divisor, Matrix, validate_configuration
from .engine import connected_components
from .errors import InputError

OFF_DIAGONAL_MAX = 4
DIAGONAL_MIN = -6
DIAGONAL_MAX = 2
COEFFICIENT_NUMERATOR_MAX = 8
COEFFICIENT_DENOMINATOR_MAX = 4


def _component_names(size: int) -> tuple[str, ...]:
    return tuple(f"C{i + 1}" for i in range(size))


def random_configuration(rng: random.Random, size: int) -> CurveConfiguration:
    """Symmetric matrix with off-diagonals in [0, 4], diagonals in [-6, 2]."""
    if size < 1:
        raise InputError(f"size must be >= 1, got {size}")
    rows = [[Fraction(0)] * size for _ in range(size)]
    for i in range(size):
        rows[i][i] = Fraction(rng.randint(DIAGONAL_MIN, DIAGONAL_MAX))
        for j in range(i + 1, size):
            value = Fraction(rng.randint(0, OFF_DIAGONAL_MAX))
            rows[i][j] = value
            rows[j][i] = value
    return validate_configuration(_component_names(size), rows)


def random_effective_divisor(rng: random.Random, size: int) -> Divisor:
    """Strictly positive coefficients with small denominators."""
    coefficients = []
    for _ in range(size):
        numerator = rng.randint(1, COEFFICIENT_NUMERATOR_MAX)
        denominator = rng.randint(1, COEFFICIENT_DENOMINATOR_MAX)
        coefficients.append(Fraction(numerator, denominator))
    return Divisor(tuple(coefficients))


def random_problem(rng: random.Random, size: int) -> tuple[CurveConfiguration, Divisor]:
    config = random_configuration(rng, size)
    divisor = random_effective_divisor(rng, size)
    return config, divisor


def random_connected_configuration(rng: random.Random, size: int) -> CurveConfiguration:
    """Like random_configuration but resampled until the dual graph connects."""
    while True:
        config = random_configuration(rng, size)
        if len(connected_components(config.matrix)) == 1:
            return config


def random_symmetric_matrix(
    rng: random.Random,
    size: int,
    low: int = -6,
    high: int = 6,
    max_denominator: Optional[int] = None,
) -> Matrix:
    """General symmetric matrix, signs unconstrained; for linear algebra tests."""
    rows = [[Fraction(0)] * size for _ in range(size)]
    for i in range(size):
        for j in range(i, size):
            value = Fraction(rng.randint(low, high))
            if max_denominator is not None and max_denominator > 1:
                value = value / rng.randint(1, max_denominator)
            rows[i][j] = value
            rows[j][i] = value
    return tuple(tuple(row) for row in rows)
