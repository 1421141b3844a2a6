"""Exact linear programming over the rationals.

A bounded-variable primal simplex with Bland's rule. All pivoting is done
in Fraction arithmetic, entering/leaving choices are index-deterministic,
so two runs on equal inputs produce bit-for-bit equal outcomes and never
cycle.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional, Sequence

from .divisor import ZERO, Vector, dot
from .errors import InternalInvariantViolated, MalformedProblem

ONE = Fraction(1)


class LpStatus(Enum):
    OPTIMAL = "optimal"
    INFEASIBLE = "infeasible"
    UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class LpProblem:
    """maximize objective . x  subject to  matrix x >= rhs, lower <= x <= upper.

    upper entries may be None (no bound above); lower bounds are finite.
    """

    objective: Vector
    matrix: tuple[Vector, ...]
    rhs: Vector
    lower: Vector
    upper: tuple[Optional[Fraction], ...]


@dataclass(frozen=True)
class LpOutcome:
    status: LpStatus
    point: Optional[Vector] = None
    value: Optional[Fraction] = None
    basis: tuple[int, ...] = ()
    pivots: int = 0


def _validate(problem: LpProblem) -> None:
    n = len(problem.objective)
    if len(problem.lower) != n or len(problem.upper) != n:
        raise MalformedProblem(f"bounds must have length {n}")
    if len(problem.matrix) != len(problem.rhs):
        raise MalformedProblem("one right-hand side per constraint row")
    for row in problem.matrix:
        if len(row) != n:
            raise MalformedProblem(f"constraint rows must have length {n}")
    for lo, up in zip(problem.lower, problem.upper):
        if up is not None and lo > up:
            raise MalformedProblem(f"crossed bounds {lo} > {up}")


class _BoundedSimplex:
    """Equality-form tableau: structural variables, then one slack per
    inequality row, then one artificial per row.

    Nonbasic variables rest at a bound (at_upper tells which); `val` holds
    the current value of every variable, basic ones included.
    """

    def __init__(
        self,
        rows: Sequence[Vector],
        equalities: Sequence[bool],
        rhs: Vector,
        lower: Vector,
        upper: Sequence[Optional[Fraction]],
    ):
        n = len(lower)
        m = len(rows)
        self.n_struct = n
        self.m = m
        slack_of = {}
        col = n
        for i, eq in enumerate(equalities):
            if not eq:
                slack_of[i] = col
                col += 1
        self.artificials = tuple(range(col, col + m))
        total = col + m
        self.total = total

        self.lower: list[Fraction] = list(lower) + [ZERO] * (total - n)
        self.upper: list[Optional[Fraction]] = list(upper) + [None] * (total - n)

        # residual of each row with structurals at their lower bounds
        residuals = [rhs[i] - dot(rows[i], lower) for i in range(m)]

        self.tableau: list[list[Fraction]] = []
        for i in range(m):
            # sign chosen so the artificial column is +1 after scaling
            sign = ONE if residuals[i] >= 0 else -ONE
            line = [ZERO] * total
            for j, a in enumerate(rows[i]):
                line[j] = sign * a
            if i in slack_of:
                line[slack_of[i]] = -sign
            line[self.artificials[i]] = ONE
            self.tableau.append(line)

        self.val: list[Fraction] = list(lower) + [ZERO] * (total - n)
        for i in range(m):
            self.val[self.artificials[i]] = abs(residuals[i])
        self.at_upper: list[bool] = [False] * total
        self.basis: list[int] = list(self.artificials)
        self.in_basis: list[bool] = [False] * total
        for b in self.basis:
            self.in_basis[b] = True
        self.pivots = 0

    def _entering(self, cost: Sequence[Fraction]) -> Optional[int]:
        # Bland: smallest eligible index
        for j in range(self.total):
            if self.in_basis[j]:
                continue
            lo, up = self.lower[j], self.upper[j]
            if up is not None and lo == up:
                continue  # fixed variable, includes retired artificials
            reduced = cost[j] - sum(
                cost[self.basis[i]] * self.tableau[i][j]
                for i in range(self.m)
                if cost[self.basis[i]] != 0
            )
            if reduced > 0 and not self.at_upper[j]:
                return j
            if reduced < 0 and self.at_upper[j]:
                return j
        return None

    def _optimize(self, cost: Sequence[Fraction]) -> LpStatus:
        while True:
            enter = self._entering(cost)
            if enter is None:
                return LpStatus.OPTIMAL
            direction = -ONE if self.at_upper[enter] else ONE

            # ratio test: how far can val[enter] move toward its other bound
            best: Optional[Fraction] = None
            leave_row: Optional[int] = None
            leave_to_upper = False
            if self.upper[enter] is not None:
                best = self.upper[enter] - self.lower[enter]
            for i in range(self.m):
                coef = self.tableau[i][enter]
                if coef == 0:
                    continue
                bvar = self.basis[i]
                delta = -direction * coef  # rate of change of val[bvar]
                if delta < 0:
                    step = (self.val[bvar] - self.lower[bvar]) / (-delta)
                    to_upper = False
                else:
                    if self.upper[bvar] is None:
                        continue
                    step = (self.upper[bvar] - self.val[bvar]) / delta
                    to_upper = True
                if best is None or step < best:
                    best, leave_row, leave_to_upper = step, i, to_upper
                elif step == best and leave_row is not None and bvar < self.basis[leave_row]:
                    leave_row, leave_to_upper = i, to_upper
            if best is None:
                return LpStatus.UNBOUNDED

            if best != 0:
                self.val[enter] += direction * best
                for i in range(self.m):
                    coef = self.tableau[i][enter]
                    if coef != 0:
                        self.val[self.basis[i]] -= direction * best * coef
            if leave_row is None:
                self.at_upper[enter] = not self.at_upper[enter]
            else:
                self._pivot(leave_row, enter, leave_to_upper)
            self.pivots += 1

    def _pivot(self, row: int, enter: int, leave_to_upper: bool) -> None:
        leaving = self.basis[row]
        self.in_basis[leaving] = False
        self.at_upper[leaving] = leave_to_upper
        pivot = self.tableau[row][enter]
        self.tableau[row] = [v / pivot for v in self.tableau[row]]
        for i in range(self.m):
            if i != row and self.tableau[i][enter] != 0:
                f = self.tableau[i][enter]
                self.tableau[i] = [
                    a - f * b for a, b in zip(self.tableau[i], self.tableau[row])
                ]
        self.basis[row] = enter
        self.in_basis[enter] = True
        self.at_upper[enter] = False

    def phase_one(self) -> bool:
        """Drive artificials to zero. True on feasibility."""
        if self.m:
            cost = [ZERO] * self.total
            for a in self.artificials:
                cost[a] = -ONE
            status = self._optimize(cost)
            if status is not LpStatus.OPTIMAL:
                raise InternalInvariantViolated("phase one cannot be unbounded")
            if sum(self.val[a] for a in self.artificials) != 0:
                return False
            for a in self.artificials:
                self.upper[a] = ZERO  # pin at zero for phase two
        return True

    def maximize(self, objective: Vector) -> LpOutcome:
        if not self.phase_one():
            return LpOutcome(LpStatus.INFEASIBLE, pivots=self.pivots)
        cost = [ZERO] * self.total
        for j, c in enumerate(objective):
            cost[j] = c
        status = self._optimize(cost)
        if status is LpStatus.UNBOUNDED:
            return LpOutcome(LpStatus.UNBOUNDED, pivots=self.pivots)
        point = tuple(self.val[: self.n_struct])
        return LpOutcome(
            LpStatus.OPTIMAL,
            point=point,
            value=dot(objective, point),
            basis=tuple(sorted(self.basis)),
            pivots=self.pivots,
        )

    def feasible_point(self) -> Optional[Vector]:
        if not self.phase_one():
            return None
        return tuple(self.val[: self.n_struct])


def lp_maximize(problem: LpProblem) -> LpOutcome:
    """Solve the boxed LP exactly. Optimal points are re-checked before return."""
    _validate(problem)
    simplex = _BoundedSimplex(
        problem.matrix,
        equalities=[False] * len(problem.matrix),
        rhs=problem.rhs,
        lower=problem.lower,
        upper=problem.upper,
    )
    outcome = simplex.maximize(problem.objective)
    if outcome.status is LpStatus.OPTIMAL:
        _check_feasible(problem, outcome.point)
    return outcome


def _check_feasible(problem: LpProblem, point: Vector) -> None:
    for lo, up, x in zip(problem.lower, problem.upper, point):
        if x < lo or (up is not None and x > up):
            raise InternalInvariantViolated(f"solver left the box: {x}")
    for row, b in zip(problem.matrix, problem.rhs):
        if dot(row, point) < b:
            raise InternalInvariantViolated("solver violated a constraint row")


def lp_feasible_point(
    matrix: Sequence[Vector],
    rhs: Vector,
    lower: Vector,
    upper: Sequence[Optional[Fraction]],
    normalization: Vector,
    level: Fraction,
) -> Optional[Vector]:
    """A point with matrix x >= rhs, bounds, and normalization . x == level.

    Returns None when the system is infeasible.
    """
    n = len(lower)
    if len(upper) != n or len(normalization) != n:
        raise MalformedProblem(f"bounds and normalization must have length {n}")
    if len(matrix) != len(rhs):
        raise MalformedProblem("one right-hand side per constraint row")
    for row in matrix:
        if len(row) != n:
            raise MalformedProblem(f"constraint rows must have length {n}")
    if all(w == 0 for w in normalization):
        raise MalformedProblem("normalization vector is zero")
    for lo, up in zip(lower, upper):
        if up is not None and lo > up:
            raise MalformedProblem(f"crossed bounds {lo} > {up}")
    rows = list(matrix) + [tuple(normalization)]
    simplex = _BoundedSimplex(
        rows,
        equalities=[False] * len(matrix) + [True],
        rhs=tuple(rhs) + (level,),
        lower=lower,
        upper=tuple(upper),
    )
    point = simplex.feasible_point()
    if point is None:
        return None
    for row, b in zip(matrix, rhs):
        if dot(row, point) < b:
            raise InternalInvariantViolated("phase one returned an infeasible point")
    if dot(normalization, point) != level:
        raise InternalInvariantViolated("normalization row not satisfied")
    return point
