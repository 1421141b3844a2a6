"""Exact rational linear algebra.

Inertia of a symmetric matrix is computed by congruence diagonalization
(simultaneous row and column operations), which preserves the sign counts.
Every run records a transcript of elementary steps so the certificate can
be replayed against the original matrix by an independent checker.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .divisor import Matrix, Vector, ZERO
from .errors import DimensionMismatch, InternalInvariantViolated, NotSymmetric

ONE = Fraction(1)


@dataclass(frozen=True)
class CongruenceStep:
    """One elementary congruence: a row operation mirrored on columns.

    kind 'swap': exchange rows/cols target and source.
    kind 'add':  row[target] += factor * row[source], same on columns.
    """

    kind: str
    target: int
    source: int
    factor: Optional[Fraction] = None


@dataclass(frozen=True)
class InertiaCertificate:
    n_plus: int
    n_zero: int
    n_minus: int
    transcript: tuple[CongruenceStep, ...]

    def counts(self) -> tuple[int, int, int]:
        return (self.n_plus, self.n_zero, self.n_minus)


@dataclass(frozen=True)
class KernelBasis:
    vectors: tuple[Vector, ...]


def check_symmetric(matrix: Sequence[Sequence[Fraction]]) -> None:
    r = len(matrix)
    if any(len(row) != r for row in matrix):
        raise NotSymmetric("matrix is not square")
    for i in range(r):
        for j in range(i + 1, r):
            if matrix[i][j] != matrix[j][i]:
                raise NotSymmetric(f"entries ({i}, {j}) and ({j}, {i}) differ")


def apply_step(rows: list[list[Fraction]], step: CongruenceStep) -> None:
    """Apply one congruence step in place. Shared by solver and replayer."""
    t, s = step.target, step.source
    if step.kind == "swap":
        rows[t], rows[s] = rows[s], rows[t]
        for row in rows:
            row[t], row[s] = row[s], row[t]
    elif step.kind == "add":
        f = step.factor
        rows[t] = [a + f * b for a, b in zip(rows[t], rows[s])]
        for row in rows:
            row[t] = row[t] + f * row[s]
    else:
        raise InternalInvariantViolated(f"unknown congruence step kind {step.kind!r}")


def replay_transcript(matrix: Sequence[Sequence[Fraction]], transcript: Sequence[CongruenceStep]) -> Matrix:
    """Re-run a transcript on a fresh copy and return the resulting matrix."""
    rows = [list(row) for row in matrix]
    for step in transcript:
        apply_step(rows, step)
    return tuple(tuple(row) for row in rows)


def inertia(matrix: Sequence[Sequence[Fraction]]) -> InertiaCertificate:
    """Sylvester sign counts (n_plus, n_zero, n_minus) with a replayable transcript."""
    check_symmetric(matrix)
    r = len(matrix)
    rows = [list(row) for row in matrix]
    transcript: list[CongruenceStep] = []

    def do(step: CongruenceStep) -> None:
        apply_step(rows, step)
        transcript.append(step)

    for k in range(r):
        if rows[k][k] == 0:
            pivot_row = next((i for i in range(k + 1, r) if rows[i][i] != 0), None)
            if pivot_row is not None:
                do(CongruenceStep("swap", k, pivot_row))
            else:
                # all remaining diagonal entries vanish; find any off-diagonal
                pair = next(
                    ((i, j) for i in range(k, r) for j in range(i + 1, r) if rows[i][j] != 0),
                    None,
                )
                if pair is None:
                    break  # trailing block is identically zero
                i, j = pair
                # adding row/col j into i turns the (i, i) entry into 2*S[i][j]
                do(CongruenceStep("add", i, j, ONE))
                if i != k:
                    do(CongruenceStep("swap", k, i))
        pivot = rows[k][k]
        for i in range(k + 1, r):
            if rows[i][k] != 0:
                do(CongruenceStep("add", i, k, -rows[i][k] / pivot))

    diagonal = [rows[i][i] for i in range(r)]
    n_plus = sum(1 for d in diagonal if d > 0)
    n_minus = sum(1 for d in diagonal if d < 0)
    cert = InertiaCertificate(n_plus, r - n_plus - n_minus, n_minus, tuple(transcript))
    if not verify_inertia(matrix, cert):
        raise InternalInvariantViolated("inertia transcript failed replay")
    return cert


def verify_inertia(matrix: Sequence[Sequence[Fraction]], cert: InertiaCertificate) -> bool:
    """Replay the transcript and confirm it diagonalizes with matching counts."""
    r = len(matrix)
    if cert.n_plus + cert.n_zero + cert.n_minus != r:
        return False
    final = replay_transcript(matrix, cert.transcript)
    for i in range(r):
        for j in range(r):
            if i != j and final[i][j] != 0:
                return False
    diagonal = [final[i][i] for i in range(r)]
    return (
        cert.n_plus == sum(1 for d in diagonal if d > 0)
        and cert.n_minus == sum(1 for d in diagonal if d < 0)
    )


def transcript_digest(transcript: Sequence[CongruenceStep]) -> str:
    """Stable hash of a transcript, for report files."""
    parts = []
    for step in transcript:
        if step.kind == "swap":
            parts.append(f"swap {step.target} {step.source}")
        else:
            parts.append(f"add {step.target} {step.source} {step.factor}")
    payload = "\n".join(parts).encode("ascii")
    return "sha256:" + hashlib.sha256(payload).hexdigest()


def is_negative_definite(matrix: Sequence[Sequence[Fraction]]) -> bool:
    cert = inertia(matrix)
    return cert.n_plus == 0 and cert.n_zero == 0


def is_negative_semidefinite(matrix: Sequence[Sequence[Fraction]]) -> bool:
    check_symmetric(matrix)
    # a zero diagonal entry with a nonzero row is already indefinite
    for i, row in enumerate(matrix):
        if row[i] == 0 and any(v != 0 for v in row):
            return False
    return inertia(matrix).n_plus == 0


def kernel_basis(matrix: Sequence[Sequence[Fraction]]) -> KernelBasis:
    """Basis of the null space, via reduced row echelon form."""
    m = len(matrix)
    n = len(matrix[0]) if m else 0
    rows = [list(row) for row in matrix]
    pivot_cols: list[int] = []
    rank = 0
    for col in range(n):
        pivot_row = next((i for i in range(rank, m) if rows[i][col] != 0), None)
        if pivot_row is None:
            continue
        rows[rank], rows[pivot_row] = rows[pivot_row], rows[rank]
        pivot = rows[rank][col]
        rows[rank] = [v / pivot for v in rows[rank]]
        for i in range(m):
            if i != rank and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[rank])]
        pivot_cols.append(col)
        rank += 1
    free_cols = [c for c in range(n) if c not in pivot_cols]
    vectors = []
    for free in free_cols:
        v = [ZERO] * n
        v[free] = ONE
        for row_index, col in enumerate(pivot_cols):
            v[col] = -rows[row_index][free]
        vectors.append(tuple(v))
    return KernelBasis(tuple(vectors))


def solve_linear(matrix: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]) -> Optional[Vector]:
    """One exact solution of matrix * x = rhs, or None if inconsistent.

    Free variables are set to zero, so the answer is deterministic.
    """
    m = len(matrix)
    if len(rhs) != m:
        raise DimensionMismatch(f"{m} rows but {len(rhs)} right-hand sides")
    n = len(matrix[0]) if m else 0
    rows = [list(row) + [b] for row, b in zip(matrix, rhs)]
    pivot_cols: list[int] = []
    rank = 0
    for col in range(n):
        pivot_row = next((i for i in range(rank, m) if rows[i][col] != 0), None)
        if pivot_row is None:
            continue
        rows[rank], rows[pivot_row] = rows[pivot_row], rows[rank]
        pivot = rows[rank][col]
        rows[rank] = [v / pivot for v in rows[rank]]
        for i in range(m):
            if i != rank and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[rank])]
        pivot_cols.append(col)
        rank += 1
    for i in range(rank, m):
        if rows[i][n] != 0:
            return None
    x = [ZERO] * n
    for row_index, col in enumerate(pivot_cols):
        x[col] = rows[row_index][n]
    return tuple(x)
