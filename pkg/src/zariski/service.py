"""Boundary layer between wire formats and the exact core.

The CLI and the HTTP endpoints both call these functions; they share the
pydantic models in schemas.py, so file formats and API bodies are
identical.
"""

from __future__ import annotations

import random
import re
from fractions import Fraction
from typing import Optional, Sequence

from . import engine, generator
from .divisor import (
    CurveConfiguration,
    Divisor,
    SupportSet,
    rational_vector,
    restrict,
    validate_configuration,
)
from .errors import EmptySupport, OracleInapplicable, ProblemFormatError
from .linalg import InertiaCertificate, inertia, transcript_digest
from .schemas import (
    Certificates,
    DecomposeRequest,
    GenerateRequest,
    GenerateResponse,
    InertiaSummary,
    ProblemFile,
    ReportFile,
    SolverInfo,
    VerifyRequest,
    VerifyResponse,
    WitnessReport,
    WitnessRequest,
    WitnessValues,
)

RATIONAL_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


def parse_rational(text: str, where: str) -> Fraction:
    """Strict 'p' or 'p/q' to Fraction; anything else is a format error."""
    if not isinstance(text, str) or not RATIONAL_RE.match(text):
        raise ProblemFormatError(f"{where}: {text!r} is not an integer or p/q fraction")
    try:
        return Fraction(text)
    except ZeroDivisionError:
        raise ProblemFormatError(f"{where}: zero denominator in {text!r}") from None


def format_rational(value: Fraction) -> str:
    return str(value)


def parse_rational_list(values: Sequence[str], where: str) -> tuple[Fraction, ...]:
    return tuple(parse_rational(v, f"{where}[{i}]") for i, v in enumerate(values))


def load_configuration(problem: ProblemFile) -> CurveConfiguration:
    rows = [
        parse_rational_list(row, f"intersection_matrix[{i}]")
        for i, row in enumerate(problem.intersection_matrix)
    ]
    return validate_configuration(problem.components, rows)


def load_divisor(problem: ProblemFile, config: CurveConfiguration) -> Divisor:
    if problem.divisor is None:
        raise ProblemFormatError("problem has no divisor entry")
    coefficients = parse_rational_list(problem.divisor, "divisor")
    if len(coefficients) != config.size:
        raise ProblemFormatError(
            f"divisor has {len(coefficients)} entries for {config.size} components"
        )
    return Divisor(coefficients)


def _inertia_summary(cert: InertiaCertificate) -> InertiaSummary:
    return InertiaSummary(
        n_plus=cert.n_plus,
        n_zero=cert.n_zero,
        n_minus=cert.n_minus,
        transcript_digest=transcript_digest(cert.transcript),
    )


def build_report(
    problem: ProblemFile,
    config: CurveConfiguration,
    result: engine.ZariskiResult,
    stats: engine.SolverStats,
    oracle_agreement: Optional[bool],
) -> ReportFile:
    support_names = [config.names[i] for i in result.negative_support]
    orthogonality = {
        config.names[i]: format_rational(p)
        for i, p in zip(result.negative_support, result.orthogonality_products)
    }
    negativity = None
    if result.negativity is not None:
        negativity = _inertia_summary(result.negativity)
    return ReportFile(
        problem=problem,
        positive_part=[format_rational(c) for c in result.positive_part.coefficients],
        negative_part=[format_rational(c) for c in result.negative_part.coefficients],
        negative_support=support_names,
        certificates=Certificates(
            nef_products=[format_rational(p) for p in result.nef_products],
            orthogonality=orthogonality,
            negativity=negativity,
        ),
        solver=SolverInfo(lp_pivots=stats.lp_pivots, oracle_agreement=oracle_agreement),
    )


def run_decompose(request: DecomposeRequest) -> ReportFile:
    config = load_configuration(request.problem)
    divisor = load_divisor(request.problem, config)
    result, stats = engine.decompose_with_stats(config, divisor)
    agreement: Optional[bool] = None
    if request.oracle:
        try:
            agreement = engine.fujita_oracle(config, divisor) == result
        except OracleInapplicable:
            agreement = None
    return build_report(request.problem, config, result, stats, agreement)


def run_verify(request: VerifyRequest) -> VerifyResponse:
    """Re-check the three properties from scratch; stored certificates are ignored."""
    config = load_configuration(request.problem)
    divisor = load_divisor(request.problem, config)
    report = request.report
    if len(report.positive_part) != config.size or len(report.negative_part) != config.size:
        raise ProblemFormatError("report parts do not match the configuration size")
    positive = Divisor(parse_rational_list(report.positive_part, "positive_part"))
    negative = Divisor(parse_rational_list(report.negative_part, "negative_part"))
    violation = engine.verify_decomposition(config, divisor, positive, negative)
    return VerifyResponse(ok=violation is None, violation=violation)


def run_witness(request: WitnessRequest) -> WitnessReport:
    config = load_configuration(request.problem)
    if request.support is not None:
        indices = sorted(set(request.support))
        if not indices:
            raise EmptySupport("witness support selection is empty")
        if indices[0] < 0 or indices[-1] >= config.size:
            raise ProblemFormatError(
                f"support indices must lie in [0, {config.size - 1}]"
            )
        config = restrict(config, SupportSet(tuple(indices)))
    witness = engine.find_nef_witness(config)
    if witness is None:
        summary = _inertia_summary(inertia(config.matrix))
        return WitnessReport(
            components=list(config.names),
            negative_definite=True,
            witness=None,
            inertia=summary,
        )
    return WitnessReport(
        components=list(config.names),
        negative_definite=False,
        witness=WitnessValues(
            coefficients=[format_rational(c) for c in witness.coefficients],
            products=[format_rational(p) for p in witness.products],
        ),
        inertia=None,
    )


def run_generate(request: GenerateRequest) -> GenerateResponse:
    rng = random.Random(request.seed)
    problems = []
    for _ in range(request.count):
        config, divisor = generator.random_problem(rng, request.size)
        problems.append(
            ProblemFile(
                components=list(config.names),
                intersection_matrix=[
                    [format_rational(v) for v in row] for row in config.matrix
                ],
                divisor=[format_rational(c) for c in divisor.coefficients],
            )
        )
    return GenerateResponse(problems=problems)
