"""Independent reference computations for cross-checking the package.

Nothing here may call into zariski's linalg or lp internals: the whole
point is a second route to the same numbers. Inertia comes from the
characteristic polynomial and sign-variation counting; LP optima come from
brute-force vertex enumeration.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

ZERO = Fraction(0)
ONE = Fraction(1)


def identity(n):
    return [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]


def mat_mul(a, b):
    n, k, m = len(a), len(b), len(b[0]) if b else 0
    return [
        [sum((a[i][t] * b[t][j] for t in range(k)), ZERO) for j in range(m)]
        for i in range(n)
    ]


def trace(a):
    return sum((a[i][i] for i in range(len(a))), ZERO)


def char_poly(matrix):
    """Coefficients [1, c1, ..., cn] of det(t*I - A), Faddeev-LeVerrier."""
    n = len(matrix)
    a = [list(row) for row in matrix]
    coeffs = [ONE]
    m = identity(n)
    for k in range(1, n + 1):
        am = mat_mul(a, m)
        c = -trace(am) / k
        coeffs.append(c)
        m = am  # M_{k+1} = A M_k + c_k I
        for i in range(n):
            m[i][i] += c
    return coeffs


def sign_variations(coeffs):
    signs = [1 if c > 0 else -1 for c in coeffs if c != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def charpoly_inertia(matrix):
    """(n_plus, n_zero, n_minus) of a symmetric matrix.

    Eigenvalues are real, so Descartes' rule is exact: positive roots are
    the sign variations of p(t), negative roots those of p(-t), and zero
    roots the trailing zero coefficients.
    """
    coeffs = char_poly(matrix)
    n = len(matrix)
    n_zero = 0
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
        n_zero += 1
    n_plus = sign_variations(coeffs)
    degree = len(coeffs) - 1
    flipped = [c if (degree - i) % 2 == 0 else -c for i, c in enumerate(coeffs)]
    n_minus = sign_variations(flipped)
    assert n_plus + n_minus == degree, "polynomial of a symmetric matrix must be real rooted"
    assert n_plus + n_zero + n_minus == n
    return (n_plus, n_zero, n_minus)


def solve_square(a, b):
    """Unique solution of a square system, or None if singular."""
    n = len(a)
    rows = [list(row) + [rhs] for row, rhs in zip(a, b)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if rows[r][col] != 0), None)
        if pivot is None:
            return None
        rows[col], rows[pivot] = rows[pivot], rows[col]
        p = rows[col][col]
        rows[col] = [v / p for v in rows[col]]
        for r in range(n):
            if r != col and rows[r][col] != 0:
                f = rows[r][col]
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[col])]
    return tuple(rows[i][n] for i in range(n))


def box_constraints(matrix, bound):
    """The region 0 <= x <= bound, matrix x >= 0, as (row, rhs) pairs with row.x >= rhs."""
    n = len(bound)
    rows = []
    for i in range(n):
        e = [ZERO] * n
        e[i] = ONE
        rows.append((tuple(e), ZERO))  # x_i >= 0
        f = [ZERO] * n
        f[i] = -ONE
        rows.append((tuple(f), -bound[i]))  # -x_i >= -a_i
    for row in matrix:
        rows.append((tuple(row), ZERO))
    return rows


def enumerate_vertices(constraints, n):
    """All vertices of {x : row.x >= rhs for each constraint}, brute force."""
    vertices = []
    for chosen in combinations(range(len(constraints)), n):
        a = [list(constraints[i][0]) for i in chosen]
        b = [constraints[i][1] for i in chosen]
        point = solve_square(a, b)
        if point is None:
            continue
        if all(
            sum((row[j] * point[j] for j in range(n)), ZERO) >= rhs
            for row, rhs in constraints
        ):
            if point not in vertices:
                vertices.append(point)
    return vertices


def brute_force_box_maximum(matrix, bound):
    """Componentwise-largest point of the box region, via vertex enumeration.

    The region is closed under componentwise max, so the vertex maximizing
    sum(x) is that largest point and the argmax is unique.
    """
    n = len(bound)
    vertices = enumerate_vertices(box_constraints(matrix, bound), n)
    assert vertices, "0 is always in the region"
    best = max(vertices, key=lambda v: sum(v))
    top = [v for v in vertices if sum(v) == sum(best)]
    assert len(top) == 1, "componentwise max must be the unique argmax"
    return best


def brute_force_lp_maximum(constraints, n, objective):
    """(value, vertices attaining it) for max objective.x over a bounded region."""
    vertices = enumerate_vertices(constraints, n)
    assert vertices
    value = max(sum((c * v[j] for j, c in enumerate(objective)), ZERO) for v in vertices)
    argmax = [
        v
        for v in vertices
        if sum((c * v[j] for j, c in enumerate(objective)), ZERO) == value
    ]
    return value, argmax
