"""Command-line front end.

A thin client over the service layer; the HTTP API exposes the same
operations with the same models. Exit codes: 0 success, 1 bad input,
2 internal failure, 3 verification found a violated property.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

from pydantic import ValidationError

from . import __version__
from .errors import InputError, ZariskiError
from .schemas import (
    DecomposeRequest,
    GenerateRequest,
    ProblemFile,
    ReportFile,
    VerifyRequest,
    WitnessReport,
    WitnessRequest,
)
from .service import run_decompose, run_generate, run_verify, run_witness

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_INTERNAL = 2
EXIT_VIOLATION = 3


def _fail(message: str) -> None:
    print(f"error: {message}", file=sys.stderr)


def _load_model(path: str, model):
    try:
        text = Path(path).read_text()
    except OSError as error:
        raise InputError(f"cannot read {path}: {error.strerror}") from error
    try:
        return model.model_validate_json(text)
    except ValidationError as error:
        first = error.errors()[0]
        location = ".".join(str(part) for part in first["loc"])
        raise InputError(f"{path}: {location}: {first['msg']}") from error


def _dump(model) -> str:
    return json.dumps(model.model_dump(), indent=2) + "\n"


def _emit(args, model, text: str) -> None:
    if args.output:
        Path(args.output).write_text(_dump(model))
    if args.quiet:
        return
    print(_dump(model).rstrip("\n") if args.json else text)


def _decompose_text(report: ReportFile) -> str:
    names = report.problem.components
    lines = [
        f"components: {', '.join(names)}",
        f"divisor:       ({', '.join(report.problem.divisor or [])})",
        f"positive part: ({', '.join(report.positive_part)})",
        f"negative part: ({', '.join(report.negative_part)})",
        f"nef products:  ({', '.join(report.certificates.nef_products)})",
    ]
    if report.negative_support:
        lines.append(f"support of negative part: {', '.join(report.negative_support)}")
        negativity = report.certificates.negativity
        lines.append(
            "inertia there: "
            f"(+{negativity.n_plus}, 0:{negativity.n_zero}, -{negativity.n_minus})"
        )
    else:
        lines.append("negative part is zero; the divisor is nef")
    lines.append(f"lp pivots: {report.solver.lp_pivots}")
    if report.solver.oracle_agreement is not None:
        lines.append(
            "oracle: agrees" if report.solver.oracle_agreement else "oracle: DISAGREES"
        )
    return "\n".join(lines)


def _witness_text(report: WitnessReport) -> str:
    if report.negative_definite:
        counts = report.inertia
        return (
            f"negative definite on {', '.join(report.components)}: "
            f"(+{counts.n_plus}, 0:{counts.n_zero}, -{counts.n_minus}); no witness exists"
        )
    return (
        f"witness on {', '.join(report.components)}\n"
        f"coefficients: ({', '.join(report.witness.coefficients)})\n"
        f"products:     ({', '.join(report.witness.products)})"
    )


def cmd_decompose(args) -> int:
    problem = _load_model(args.problem, ProblemFile)
    report = run_decompose(DecomposeRequest(problem=problem, oracle=args.oracle))
    _emit(args, report, _decompose_text(report))
    if report.solver.oracle_agreement is False:
        _fail("iterative cross-check disagrees with the solver")
        return EXIT_INTERNAL
    return EXIT_OK


def cmd_verify(args) -> int:
    problem = _load_model(args.problem, ProblemFile)
    report = _load_model(args.report, ReportFile)
    response = run_verify(VerifyRequest(problem=problem, report=report))
    if response.ok:
        if not args.quiet:
            print("ok: decomposition verified")
        return EXIT_OK
    if not args.quiet:
        print(f"violation: {response.violation}")
    return EXIT_VIOLATION


def cmd_witness(args) -> int:
    problem = _load_model(args.problem, ProblemFile)
    selection = None
    if args.witness_support:
        raw = args.witness_support
        try:
            selection = [int(part) for part in raw.split(",") if part.strip() != ""]
        except ValueError:
            raise InputError(f"--witness-support takes comma-separated indices, got {raw!r}")
    report = run_witness(WitnessRequest(problem=problem, support=selection))
    _emit(args, report, _witness_text(report))
    return EXIT_OK


def cmd_generate(args) -> int:
    response = run_generate(
        GenerateRequest(seed=args.seed, size=args.size, count=args.count)
    )
    directory = Path(args.out)
    directory.mkdir(parents=True, exist_ok=True)
    for index, problem in enumerate(response.problems):
        path = directory / f"{args.prefix}-{index:03d}.json"
        path.write_text(_dump(problem))
        if not args.quiet:
            print(path)
    return EXIT_OK


def cmd_serve(args) -> int:
    import uvicorn

    from .api import app

    uvicorn.run(app, host=args.host, port=args.port)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zariski",
        description="Exact decomposition of effective divisors, with certificates.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, output=True):
        p.add_argument("--json", action="store_true", help="print JSON instead of text")
        p.add_argument("--quiet", action="store_true", help="suppress stdout")
        if output:
            p.add_argument("--output", help="also write the JSON result to this file")

    p = sub.add_parser("decompose", help="split a divisor into nef and negative parts")
    p.add_argument("problem", help="problem JSON file")
    p.add_argument("--oracle", action="store_true", help="cross-check with the iterative route")
    common(p)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("verify", help="re-check a report against its problem")
    p.add_argument("problem", help="problem JSON file")
    p.add_argument("report", help="report JSON file")
    p.add_argument("--quiet", action="store_true", help="suppress stdout")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("witness", help="find a nef class or certify negative definiteness")
    p.add_argument("problem", help="problem JSON file")
    p.add_argument(
        "--witness-support",
        help="comma-separated component indices to restrict the search to",
    )
    common(p)
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("generate", help="write seeded random problem files")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--size", type=int, default=4, help="number of components")
    p.add_argument("--count", type=int, default=1, help="number of files")
    p.add_argument("--out", default=".", help="output directory")
    p.add_argument("--prefix", default=None, help="file name prefix")
    p.add_argument("--quiet", action="store_true", help="suppress stdout")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("serve", help="run the HTTP API")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "prefix", None) is None and args.command == "generate":
        args.prefix = f"gen-s{args.seed}-r{args.size}"
    try:
        return args.func(args)
    except ValidationError as error:
        first = error.errors()[0]
        location = ".".join(str(part) for part in first["loc"])
        _fail(f"{location}: {first['msg']}")
        return EXIT_INPUT
    except InputError as error:
        _fail(str(error))
        return EXIT_INPUT
    except ZariskiError as error:
        _fail(f"{type(error).__name__}: {error}")
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
