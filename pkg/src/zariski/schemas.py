"""Request/response and file-format models.

Every rational travels as a string "p" or "p/q" so no JSON layer can turn
it into a float. Parsing back to Fraction lives in the service layer.
"""

from __future__ import annotations

from typing import Optional

from pydantic import BaseModel, ConfigDict, Field


class StrictModel(BaseModel):
    model_config = ConfigDict(extra="forbid")


class ProblemFile(StrictModel):
    """On-disk problem: component names, matrix, and an optional divisor."""

    components: list[str]
    intersection_matrix: list[list[str]]
    divisor: Optional[list[str]] = None


class InertiaSummary(StrictModel):
    n_plus: int
    n_zero: int
    n_minus: int
    transcript_digest: str


class Certificates(StrictModel):
    nef_products: list[str]
    orthogonality: dict[str, str]
    negativity: Optional[InertiaSummary] = None


class SolverInfo(StrictModel):
    lp_pivots: int
    oracle_agreement: Optional[bool] = None


class ReportFile(StrictModel):
    """On-disk decomposition report; everything needed to re-verify."""

    problem: ProblemFile
    positive_part: list[str]
    negative_part: list[str]
    negative_support: list[str]
    certificates: Certificates
    solver: SolverInfo


class DecomposeRequest(StrictModel):
    problem: ProblemFile
    oracle: bool = False


class VerifyRequest(StrictModel):
    problem: ProblemFile
    report: ReportFile


class VerifyResponse(StrictModel):
    ok: bool
    violation: Optional[str] = None


class WitnessRequest(StrictModel):
    problem: ProblemFile
    support: Optional[list[int]] = None


class WitnessValues(StrictModel):
    coefficients: list[str]
    products: list[str]


class WitnessReport(StrictModel):
    components: list[str]
    negative_definite: bool
    witness: Optional[WitnessValues] = None
    inertia: Optional[InertiaSummary] = None


class GenerateRequest(StrictModel):
    seed: int
    size: int = Field(ge=1)
    count: int = Field(ge=1)


class GenerateResponse(StrictModel):
    problems: list[ProblemFile]
