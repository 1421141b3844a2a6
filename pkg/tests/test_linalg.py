import random
from fractions import Fraction

import pytest

import oracles
from zariski import (
    NotSymmetric,
    inertia,
    is_negative_definite,
    is_negative_semidefinite,
    kernel_basis,
    solve_linear,
    verify_inertia,
)
from zariski.generator import random_symmetric_matrix
from zariski.linalg import InertiaCertificate, replay_transcript, transcript_digest

F = Fraction


def M(*rows):
    return tuple(tuple(F(v) for v in row) for row in rows)


def test_inertia_frozen_examples():
    assert inertia(M([-2, 1], [1, -2])).counts() == (0, 0, 2)
    assert inertia(M([0, 1], [1, 0])).counts() == (1, 0, 1)
    assert inertia(M([-2, 2], [2, -2])).counts() == (0, 1, 1)
    assert inertia(M([0, 0], [0, 0])).counts() == (0, 2, 0)
    assert inertia(M([1, 0], [0, -1])).counts() == (1, 0, 1)
    assert inertia(M([3],)).counts() == (1, 0, 0)
    assert inertia(M([0],)).counts() == (0, 1, 0)


def test_inertia_requires_symmetry():
    with pytest.raises(NotSymmetric):
        inertia(M([0, 1], [2, 0]))


def test_transcript_replays_to_diagonal():
    matrix = M([0, 1, 2], [1, -2, 1], [2, 1, 0])
    cert = inertia(matrix)
    final = replay_transcript(matrix, cert.transcript)
    assert all(final[i][j] == 0 for i in range(3) for j in range(3) if i != j)
    signs = [final[i][i] for i in range(3)]
    assert sum(1 for d in signs if d > 0) == cert.n_plus
    assert sum(1 for d in signs if d < 0) == cert.n_minus


def test_verify_inertia_rejects_tampering():
    matrix = M([-2, 1], [1, -2])
    cert = inertia(matrix)
    assert verify_inertia(matrix, cert)
    wrong_counts = InertiaCertificate(1, 0, 1, cert.transcript)
    assert not verify_inertia(matrix, wrong_counts)
    truncated = InertiaCertificate(cert.n_plus, cert.n_zero, cert.n_minus, cert.transcript[:-1])
    assert not verify_inertia(matrix, truncated)


def test_transcript_digest_is_stable():
    matrix = M([0, 1], [1, -2])
    first = inertia(matrix)
    second = inertia(matrix)
    assert first == second
    assert transcript_digest(first.transcript) == transcript_digest(second.transcript)
    assert transcript_digest(first.transcript).startswith("sha256:")
    other = inertia(M([-2, 1], [1, -2]))
    assert transcript_digest(other.transcript) != transcript_digest(first.transcript)


def test_inertia_matches_charpoly_oracle_on_corpus():
    # same sign counts along a fully independent route
    rng = random.Random(424242)
    for trial in range(300):
        size = 1 + trial % 5
        matrix = random_symmetric_matrix(rng, size, max_denominator=3)
        assert inertia(matrix).counts() == oracles.charpoly_inertia(matrix)


def test_inertia_invariant_under_congruence():
    rng = random.Random(99)
    for _ in range(60):
        size = rng.randint(1, 4)
        matrix = random_symmetric_matrix(rng, size)
        # congruence by a random invertible triangular-ish matrix
        e = [[F(0)] * size for _ in range(size)]
        for i in range(size):
            e[i][i] = F(rng.choice([1, -1, 2]))
            for j in range(i):
                e[i][j] = F(rng.randint(-2, 2))
        transformed = tuple(
            tuple(
                sum(e[i][k] * matrix[k][l] * e[j][l] for k in range(size) for l in range(size))
                for j in range(size)
            )
            for i in range(size)
        )
        assert inertia(transformed).counts() == inertia(matrix).counts()


def test_definiteness_predicates():
    assert is_negative_definite(M([-1],))
    assert is_negative_definite(M([-2, 1], [1, -2]))
    assert not is_negative_definite(M([-2, 2], [2, -2]))
    assert is_negative_semidefinite(M([-2, 2], [2, -2]))
    assert is_negative_semidefinite(M([0],))
    assert not is_negative_semidefinite(M([0, 1], [1, 0]))
    assert not is_negative_semidefinite(M([0, 1], [1, -2]))
    assert is_negative_semidefinite(M([0, 0], [0, -1]))
    assert is_negative_semidefinite(M([0, 0], [0, 0]))
    assert not is_negative_definite(M([0, 0], [0, 0]))
    assert not is_negative_semidefinite(M([1],))


def test_definiteness_invariant_under_permutation():
    rng = random.Random(55)
    for trial in range(120):
        size = 1 + trial % 5
        matrix = random_symmetric_matrix(rng, size, low=-4, high=4)
        order = list(range(size))
        rng.shuffle(order)
        shuffled = tuple(
            tuple(matrix[order[i]][order[j]] for j in range(size)) for i in range(size)
        )
        assert is_negative_definite(matrix) == is_negative_definite(shuffled)
        assert is_negative_semidefinite(matrix) == is_negative_semidefinite(shuffled)


def test_kernel_basis_examples():
    assert kernel_basis(M([-1],)).vectors == ()
    assert kernel_basis(M([-2, 1], [1, -2])).vectors == ()
    assert kernel_basis(M([-2, 2], [2, -2])).vectors == ((F(1), F(1)),)
    assert kernel_basis(M([0, 0], [0, -1])).vectors == ((F(1), F(0)),)
    identity_like = kernel_basis(M([0, 0], [0, 0]))
    assert identity_like.vectors == ((F(1), F(0)), (F(0), F(1)))


def test_kernel_dimension_matches_charpoly_nullity():
    rng = random.Random(7)
    for trial in range(150):
        size = 1 + trial % 5
        matrix = random_symmetric_matrix(rng, size, low=-3, high=3)
        vectors = kernel_basis(matrix).vectors
        assert len(vectors) == oracles.charpoly_inertia(matrix)[1]
        for v in vectors:
            image = tuple(sum(row[j] * v[j] for j in range(size)) for row in matrix)
            assert all(value == 0 for value in image)


def test_solve_linear_examples():
    assert solve_linear(M([-2],), (F(-1),)) == (F(1, 2),)
    assert solve_linear(M([-2, 1], [1, -2]), (F(-1), F(-1))) == (F(1), F(1))
    assert solve_linear(M([1, 1], [1, 1]), (F(0), F(1))) is None
    # free variables come back as zero
    assert solve_linear(M([1, 1],), (F(2),)) == (F(2), F(0))


def test_solve_linear_on_rectangular_systems():
    rng = random.Random(1234)
    for _ in range(120):
        m = rng.randint(1, 4)
        n = rng.randint(1, 4)
        matrix = tuple(
            tuple(F(rng.randint(-4, 4)) for _ in range(n)) for _ in range(m)
        )
        rhs = tuple(F(rng.randint(-4, 4)) for _ in range(m))
        solution = solve_linear(matrix, rhs)
        if solution is None:
            continue
        image = tuple(sum(row[j] * solution[j] for j in range(n)) for row in matrix)
        assert image == rhs
