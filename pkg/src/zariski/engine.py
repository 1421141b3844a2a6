"""Decomposition engine.

Splits an effective divisor D into P + N where P is the componentwise
largest effective subdivisor with all intersection products nonnegative,
found as the optimum of a boxed LP. Every result is re-verified exactly
against the three defining properties before it is returned:

  (i)   P meets every curve nonnegatively,
  (ii)  the intersection matrix restricted to the support of N is
        negative definite (vacuous when N = 0),
  (iii) P meets every curve in the support of N in exactly zero.

The same module carries the nef machinery: membership checks, the
componentwise join of two nef divisors, a witness search proving that a
matrix is not negative definite, and an independent iterative solver used
to cross-check the LP route.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .divisor import (
    CurveConfiguration,
    Divisor,
    SupportSet,
    Vector,
    ZERO,
    expand_vector,
    require_effective,
    restrict,
    restrict_vector,
    support,
)
from .errors import (
    CertificateFailure,
    DimensionMismatch,
    InputNotNef,
    InternalInvariantViolated,
    JoinNotNef,
    OracleInapplicable,
    WitnessNotFound,
)
from .linalg import (
    InertiaCertificate,
    inertia,
    is_negative_definite,
    kernel_basis,
    solve_linear,
)
from .lp import LpOutcome, LpProblem, LpStatus, lp_feasible_point, lp_maximize

ONE = Fraction(1)


@dataclass(frozen=True)
class ZariskiResult:
    """A decomposition D = P + N together with its exact certificates.

    nef_products:           all products S * P (each >= 0)
    negative_support:       indices carrying N
    orthogonality_products: products S * P on negative_support (each == 0)
    negativity:             inertia certificate of the matrix restricted to
                            negative_support, None when N = 0
    """

    positive_part: Divisor
    negative_part: Divisor
    nef_products: Vector
    negative_support: SupportSet
    orthogonality_products: Vector
    negativity: Optional[InertiaCertificate]


@dataclass(frozen=True)
class NefWitness:
    """An effective nonzero divisor class meeting every curve nonnegatively."""

    coefficients: Vector
    products: Vector


@dataclass(frozen=True)
class SolverStats:
    lp_pivots: int


def is_nef(config: CurveConfiguration, divisor: Divisor) -> tuple[bool, Vector]:
    """Whether all intersection products are nonnegative, plus the products."""
    if divisor.size != config.size:
        raise DimensionMismatch(f"divisor size {divisor.size} for configuration of {config.size}")
    products = config.products(divisor.coefficients)
    return all(p >= 0 for p in products), products


def _solve_box(config: CurveConfiguration, bound: Divisor) -> LpOutcome:
    """Optimum of sum(x) over 0 <= x <= bound, S x >= 0."""
    r = config.size
    problem = LpProblem(
        objective=(ONE,) * r,
        matrix=config.matrix,
        rhs=(ZERO,) * r,
        lower=(ZERO,) * r,
        upper=bound.coefficients,
    )
    outcome = lp_maximize(problem)
    if outcome.status is not LpStatus.OPTIMAL:
        # x = 0 is feasible and the box is bounded, so this cannot happen
        raise InternalInvariantViolated(f"box LP reported {outcome.status.value}")
    return outcome


def maximal_nef_subdivisor(config: CurveConfiguration, divisor: Divisor) -> Divisor:
    """The componentwise largest 0 <= P <= divisor with S P >= 0.

    The feasible region is closed under componentwise max, so the unique
    maximizer of any strictly positive objective is that largest point.
    """
    require_effective(divisor)
    return _decompose(config, divisor)[0].positive_part


def zariski_decompose(config: CurveConfiguration, divisor: Divisor) -> ZariskiResult:
    """Split divisor = P + N and certify the three defining properties."""
    return _decompose(config, divisor)[0]


def decompose_with_stats(
    config: CurveConfiguration, divisor: Divisor
) -> tuple[ZariskiResult, SolverStats]:
    """zariski_decompose plus solver metadata for reports."""
    return _decompose(config, divisor)


def _decompose(
    config: CurveConfiguration, divisor: Divisor
) -> tuple[ZariskiResult, SolverStats]:
    if divisor.size != config.size:
        raise DimensionMismatch(f"divisor size {divisor.size} for configuration of {config.size}")
    require_effective(divisor)
    carrier = support(divisor)
    if len(carrier) == 0:
        result = _certify(config, divisor, Divisor.zero(config.size))
        return result, SolverStats(lp_pivots=0)
    # components with zero coefficient are forced to zero in any candidate,
    # and their product rows hold automatically (off-diagonals >= 0), so
    # solve on the support only and scatter back
    sub_config = restrict(config, carrier)
    sub_bound = Divisor(restrict_vector(divisor.coefficients, carrier))
    outcome = _solve_box(sub_config, sub_bound)
    positive = Divisor(expand_vector(outcome.point, carrier, config.size))
    result = _certify(config, divisor, positive)
    return result, SolverStats(lp_pivots=outcome.pivots)


def _certify(config: CurveConfiguration, divisor: Divisor, positive: Divisor) -> ZariskiResult:
    """Build a ZariskiResult, failing loudly if any property does not hold."""
    negative = divisor - positive
    if not positive.is_effective() or not negative.is_effective():
        raise CertificateFailure("parts are not both effective")
    nef_products = config.products(positive.coefficients)
    bad = [i for i, p in enumerate(nef_products) if p < 0]
    if bad:
        raise CertificateFailure(f"positive part meets curve {bad[0]} negatively")
    negative_support = support(negative)
    orthogonality = restrict_vector(nef_products, negative_support)
    if any(p != 0 for p in orthogonality):
        raise CertificateFailure("positive part does not annihilate the support of N")
    negativity: Optional[InertiaCertificate] = None
    if len(negative_support) > 0:
        sub = restrict(config, negative_support)
        negativity = inertia(sub.matrix)
        if negativity.n_plus != 0 or negativity.n_zero != 0:
            raise CertificateFailure(
                f"support of N has inertia {negativity.counts()}, expected negative definite"
            )
    return ZariskiResult(
        positive_part=positive,
        negative_part=negative,
        nef_products=nef_products,
        negative_support=negative_support,
        orthogonality_products=orthogonality,
        negativity=negativity,
    )


def verify_decomposition(
    config: CurveConfiguration, divisor: Divisor, positive: Divisor, negative: Divisor
) -> Optional[str]:
    """First violated property as text, or None when everything holds.

    Recomputes every check from scratch; trusts nothing precomputed.
    """
    if positive.size != config.size or negative.size != config.size:
        return "parts do not match the configuration size"
    if positive + negative != divisor:
        return "parts do not sum to the divisor"
    if not positive.is_effective() or not negative.is_effective():
        return "parts are not both effective"
    products = config.products(positive.coefficients)
    for i, p in enumerate(products):
        if p < 0:
            return f"(i) fails: product with curve {config.names[i]} is {p}"
    carrier = support(negative)
    for i in carrier:
        if products[i] != 0:
            return f"(iii) fails: product with curve {config.names[i]} is {products[i]}"
    if len(carrier) > 0:
        cert = inertia(restrict(config, carrier).matrix)
        if cert.n_plus != 0 or cert.n_zero != 0:
            return f"(ii) fails: inertia on the support of N is {cert.counts()}"
    return None


def nef_join(config: CurveConfiguration, first: Divisor, second: Divisor) -> Divisor:
    """Componentwise max of two nef divisors; certified nef before return."""
    if first.size != config.size or second.size != config.size:
        raise DimensionMismatch("divisor sizes do not match the configuration")
    for name, d in (("first", first), ("second", second)):
        ok, _ = is_nef(config, d)
        if not ok:
            raise InputNotNef(f"{name} argument is not nef")
    joined = Divisor(
        tuple(max(a, b) for a, b in zip(first.coefficients, second.coefficients))
    )
    ok, _ = is_nef(config, joined)
    if not ok:
        raise JoinNotNef("componentwise max of nef divisors failed the nef check")
    return joined


# -- nef witness search ------------------------------------------------------


def connected_components(matrix: Sequence[Sequence[Fraction]]) -> list[tuple[int, ...]]:
    """Components of the graph joining i and j when S[i][j] > 0."""
    r = len(matrix)
    seen = [False] * r
    components: list[tuple[int, ...]] = []
    for start in range(r):
        if seen[start]:
            continue
        queue = deque([start])
        seen[start] = True
        found = []
        while queue:
            i = queue.popleft()
            found.append(i)
            for j in range(r):
                if not seen[j] and j != i and matrix[i][j] > 0:
                    seen[j] = True
                    queue.append(j)
        components.append(tuple(sorted(found)))
    return components


def _checked_witness(config: CurveConfiguration, coefficients: Vector) -> NefWitness:
    if all(c == 0 for c in coefficients):
        raise InternalInvariantViolated("witness candidate is zero")
    if any(c < 0 for c in coefficients):
        raise InternalInvariantViolated("witness candidate is not effective")
    products = config.products(coefficients)
    if any(p < 0 for p in products):
        raise InternalInvariantViolated("witness candidate is not nef")
    return NefWitness(coefficients=coefficients, products=products)


def case2_kernel_recursion(
    config: CurveConfiguration, kernel_vector: Sequence[Fraction]
) -> NefWitness:
    """Witness from a kernel vector of a semidefinite, not definite, matrix.

    If the kernel vector has a sign, it (or its negation) is the witness.
    Otherwise its positive part R' satisfies R' S R' = 0, so S restricted
    to the support of R' is again semidefinite-with-kernel and strictly
    smaller; recurse there.
    """
    r = config.size
    vector = tuple(kernel_vector)
    if len(vector) != r:
        raise DimensionMismatch(f"kernel vector of length {len(vector)} for size {r}")
    if all(v == 0 for v in vector):
        raise InternalInvariantViolated("kernel vector is zero")
    if any(p != 0 for p in config.products(vector)):
        raise InternalInvariantViolated("vector is not in the kernel")
    if all(v >= 0 for v in vector):
        return _checked_witness(config, vector)
    if all(v <= 0 for v in vector):
        return _checked_witness(config, tuple(-v for v in vector))
    plus = tuple(v if v > 0 else ZERO for v in vector)
    # R' S R' = R' S R - R' S R'' = -R' S R'' <= 0, and >= 0 by
    # semidefiniteness applied off the diagonal blocks; so it vanishes
    quad = sum(
        (plus[i] * config.matrix[i][j] * plus[j] for i in range(r) for j in range(r)),
        ZERO,
    )
    if quad != 0:
        raise InternalInvariantViolated(f"positive part has self-product {quad}, expected 0")
    carrier = support(Divisor(plus))
    sub = restrict(config, carrier)
    basis = kernel_basis(sub.matrix)
    if not basis.vectors:
        raise InternalInvariantViolated("restricted matrix has trivial kernel")
    inner = case2_kernel_recursion(sub, basis.vectors[0])
    return _checked_witness(config, expand_vector(inner.coefficients, carrier, r))


def _positive_case_witness(config: CurveConfiguration) -> Optional[Vector]:
    """Feasible point of {x >= 0, sum x = 1, S x >= 0} for an indefinite block."""
    r = config.size
    return lp_feasible_point(
        matrix=config.matrix,
        rhs=(ZERO,) * r,
        lower=(ZERO,) * r,
        upper=(None,) * r,
        normalization=(ONE,) * r,
        level=ONE,
    )


def find_nef_witness(config: CurveConfiguration) -> Optional[NefWitness]:
    """Effective nonzero nef class, or None when the matrix is negative definite.

    Works one connected component at a time: a component that is not
    negative definite carries a witness on its own, padded with zeros
    elsewhere (off-component products only gain from nonnegative entries).
    """
    r = config.size
    for component in connected_components(config.matrix):
        carrier = SupportSet(component)
        sub = restrict(config, carrier) if len(component) < r else config
        cert = inertia(sub.matrix)
        if cert.n_plus == 0 and cert.n_zero == 0:
            continue  # negative definite block, nothing here
        if cert.n_plus > 0:
            point = _positive_case_witness(sub)
            if point is None:
                raise WitnessNotFound(
                    "indefinite connected block admits no normalized nef point"
                )
            coefficients = point
        else:
            basis = kernel_basis(sub.matrix)
            if not basis.vectors:
                raise InternalInvariantViolated("semidefinite block with trivial kernel")
            coefficients = case2_kernel_recursion(sub, basis.vectors[0]).coefficients
        return _checked_witness(config, expand_vector(coefficients, carrier, r))
    return None


# -- independent iterative route ---------------------------------------------


def fujita_oracle(config: CurveConfiguration, divisor: Divisor) -> ZariskiResult:
    """Active-set iteration: grow the support of N from the curves D meets
    negatively, solving for N on that support at each step.

    Raises OracleInapplicable when a restricted matrix is not negative
    definite or a solved N leaves the box; the LP route handles those.
    """
    if divisor.size != config.size:
        raise DimensionMismatch(f"divisor size {divisor.size} for configuration of {config.size}")
    require_effective(divisor)
    r = config.size
    products = config.products(divisor.coefficients)
    active = sorted(i for i in range(r) if products[i] < 0)
    if not active:
        return _certify(config, divisor, divisor)
    for _ in range(r):
        carrier = SupportSet(tuple(active))
        sub = restrict(config, carrier)
        if not is_negative_definite(sub.matrix):
            raise OracleInapplicable("active set is not negative definite")
        rhs = restrict_vector(products, carrier)
        solution = solve_linear(sub.matrix, rhs)
        if solution is None:
            raise InternalInvariantViolated("definite system reported inconsistent")
        negative = expand_vector(solution, carrier, r)
        if any(n < 0 for n in negative):
            raise OracleInapplicable("solved negative part leaves the box from below")
        if any(n > a for n, a in zip(negative, divisor.coefficients)):
            raise OracleInapplicable("solved negative part exceeds the divisor")
        positive = divisor - Divisor(negative)
        positive_products = config.products(positive.coefficients)
        grow = [i for i in range(r) if i not in carrier and positive_products[i] < 0]
        if not grow:
            return _certify(config, divisor, positive)
        active = sorted(active + grow)
    raise InternalInvariantViolated("active set failed to stabilize")
