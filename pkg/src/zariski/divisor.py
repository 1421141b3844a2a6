"""Domain types: curve configurations, Q-divisors, and support sets.

Everything here is exact. Coefficients and matrix entries are
fractions.Fraction values; integers and "p/q" strings are accepted anywhere
a rational is expected, floats never are.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import (
    DimensionMismatch,
    DuplicateName,
    EmptyConfiguration,
    EmptySupport,
    NegativeOffDiagonal,
    NotEffective,
    NotSymmetric,
)

Rational = Union[Fraction, int, str]

ZERO = Fraction(0)


def to_rational(value: Rational) -> Fraction:
    """Coerce an int, Fraction, or 'p/q' string to Fraction; reject floats."""
    if isinstance(value, bool):
        raise TypeError("bool is not a rational value")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    # floats are banned everywhere; exactness is the whole contract
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


def rational_vector(values: Iterable[Rational]) -> tuple[Fraction, ...]:
    return tuple(to_rational(v) for v in values)


def rational_matrix(rows: Iterable[Iterable[Rational]]) -> tuple[tuple[Fraction, ...], ...]:
    return tuple(rational_vector(row) for row in rows)


Matrix = tuple[tuple[Fraction, ...], ...]
Vector = tuple[Fraction, ...]


def mat_vec(matrix: Sequence[Sequence[Fraction]], x: Sequence[Fraction]) -> Vector:
    if matrix and len(matrix[0]) != len(x):
        raise DimensionMismatch(f"matrix has {len(matrix[0])} columns, vector has {len(x)}")
    return tuple(sum((row[j] * x[j] for j in range(len(x))), ZERO) for row in matrix)


def dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    if len(u) != len(v):
        raise DimensionMismatch(f"vectors of length {len(u)} and {len(v)}")
    return sum((a * b for a, b in zip(u, v)), ZERO)


@dataclass(frozen=True)
class CurveConfiguration:
    """Named curve classes plus their symmetric intersection matrix."""

    names: tuple[str, ...]
    matrix: Matrix

    @property
    def size(self) -> int:
        return len(self.names)

    def product(self, i: int, x: Sequence[Fraction]) -> Fraction:
        """Intersection product of curve i with the divisor of coefficients x."""
        return dot(self.matrix[i], x)

    def products(self, x: Sequence[Fraction]) -> Vector:
        """All intersection products S * x at once."""
        return mat_vec(self.matrix, x)


@dataclass(frozen=True)
class Divisor:
    """A Q-divisor supported on a configuration, stored as coefficients."""

    coefficients: Vector

    @classmethod
    def of(cls, values: Iterable[Rational]) -> "Divisor":
        return cls(rational_vector(values))

    @classmethod
    def zero(cls, size: int) -> "Divisor":
        return cls((ZERO,) * size)

    @property
    def size(self) -> int:
        return len(self.coefficients)

    def is_effective(self) -> bool:
        return all(c >= 0 for c in self.coefficients)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coefficients)

    def __add__(self, other: "Divisor") -> "Divisor":
        if self.size != other.size:
            raise DimensionMismatch(f"divisors of size {self.size} and {other.size}")
        return Divisor(tuple(a + b for a, b in zip(self.coefficients, other.coefficients)))

    def __sub__(self, other: "Divisor") -> "Divisor":
        if self.size != other.size:
            raise DimensionMismatch(f"divisors of size {self.size} and {other.size}")
        return Divisor(tuple(a - b for a, b in zip(self.coefficients, other.coefficients)))

    def scale(self, factor: Rational) -> "Divisor":
        f = to_rational(factor)
        return Divisor(tuple(f * c for c in self.coefficients))


@dataclass(frozen=True)
class SupportSet:
    """Strictly increasing component indices."""

    indices: tuple[int, ...]

    def __post_init__(self):
        if any(b <= a for a, b in zip(self.indices, self.indices[1:])):
            raise DimensionMismatch("support indices must be strictly increasing")
        if self.indices and self.indices[0] < 0:
            raise DimensionMismatch("support indices must be nonnegative")

    def __len__(self) -> int:
        return len(self.indices)

    def __iter__(self):
        return iter(self.indices)

    def __contains__(self, i: int) -> bool:
        return i in self.indices


def validate_configuration(names: Sequence[str], matrix: Iterable[Iterable[Rational]]) -> CurveConfiguration:
    """Build a CurveConfiguration, checking every structural invariant.

    Raises EmptyConfiguration, DuplicateName, DimensionMismatch,
    NotSymmetric, or NegativeOffDiagonal.
    """
    names = tuple(names)
    if not names:
        raise EmptyConfiguration("a configuration needs at least one curve")
    seen = set()
    for name in names:
        if name in seen:
            raise DuplicateName(f"curve name {name!r} appears twice")
        seen.add(name)
    rows = rational_matrix(matrix)
    r = len(names)
    if len(rows) != r or any(len(row) != r for row in rows):
        raise DimensionMismatch(f"intersection matrix must be {r}x{r}")
    for i in range(r):
        for j in range(i + 1, r):
            if rows[i][j] != rows[j][i]:
                raise NotSymmetric(f"entries ({i}, {j}) and ({j}, {i}) differ")
            if rows[i][j] < 0:
                raise NegativeOffDiagonal(i, j, rows[i][j])
    return CurveConfiguration(names, rows)


def leq_divisor(lhs: Divisor, rhs: Divisor) -> bool:
    """Componentwise comparison lhs <= rhs."""
    if lhs.size != rhs.size:
        raise DimensionMismatch(f"divisors of size {lhs.size} and {rhs.size}")
    return all(a <= b for a, b in zip(lhs.coefficients, rhs.coefficients))


def support(divisor: Divisor) -> SupportSet:
    """Indices with nonzero coefficient, in increasing order."""
    return SupportSet(tuple(i for i, c in enumerate(divisor.coefficients) if c != 0))


def restrict(config: CurveConfiguration, subset: SupportSet) -> CurveConfiguration:
    """The configuration induced on a nonempty subset of components."""
    if len(subset) == 0:
        raise EmptySupport("cannot restrict to an empty support")
    if subset.indices[-1] >= config.size:
        raise DimensionMismatch(
            f"support index {subset.indices[-1]} out of range for size {config.size}"
        )
    names = tuple(config.names[i] for i in subset)
    rows = tuple(tuple(config.matrix[i][j] for j in subset) for i in subset)
    return CurveConfiguration(names, rows)


def restrict_vector(x: Sequence[Fraction], subset: SupportSet) -> Vector:
    return tuple(x[i] for i in subset)


def expand_vector(x: Sequence[Fraction], subset: SupportSet, size: int) -> Vector:
    """Scatter restricted coordinates back into a length-`size` vector."""
    if len(x) != len(subset):
        raise DimensionMismatch(f"{len(x)} values for {len(subset)} support indices")
    full = [ZERO] * size
    for value, index in zip(x, subset):
        full[index] = value
    return tuple(full)


def require_effective(divisor: Divisor) -> None:
    for i, c in enumerate(divisor.coefficients):
        if c < 0:
            raise NotEffective(f"coefficient {i} is {c}, expected >= 0")
