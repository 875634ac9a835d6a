"""Batch command-line front end.

Three subcommands:

* ``analyze``    -- full spectral analysis of one matrix file,
* ``verify``     -- run the randomized theorem suites,
* ``experiment`` -- run the conjecture experiment and dump counterexamples.

Every command offers a human-readable rendering and a structured JSON
document carrying the same data; both are deterministic for a given
input, seed, and tool version.  Exit codes: 0 success, 1 suite failure,
2 parse error, 3 size bound exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .eigen import FactorizationError, Spectrum, generalized_subspaces, spectrum
from .laws import REPORT_SUITES, THEOREM_SUITES, TrialConfig, conjecture_experiment, run_suites
from .matrices import (
    DEFAULT_CHAR_BOUND,
    DEFAULT_DET_BOUND,
    Matrix,
    MatrixParseError,
    SizeBoundError,
    format_matrix,
    format_permutation,
    matrix_to_json,
    parse_matrix,
)
from .scalars import NonInvertibleError, Scalar

SCHEMA = "supertropical.report/1"
SEED_ENV_VAR = "SUPERTROPICAL_SEED"

EXIT_OK = 0
EXIT_SUITE_FAILURE = 1
EXIT_PARSE_ERROR = 2
EXIT_SIZE_BOUND = 3


def _indices_1based(indices) -> list[int] | None:
    if indices is None:
        return None
    return [i + 1 for i in indices]


def _interval_token(endpoint: Scalar | None) -> str | None:
    return None if endpoint is None else endpoint.token()


def build_analysis(
    matrix: Matrix,
    include_adjoint: bool = False,
    include_generalized: bool = False,
    det_bound: int = DEFAULT_DET_BOUND,
    char_bound: int = DEFAULT_CHAR_BOUND,
    witness_cap: int = 20_000,
) -> dict:
    """Structured analysis document for one square matrix."""
    spec: Spectrum = spectrum(
        matrix, det_bound=det_bound, char_bound=char_bound, witness_cap=witness_cap
    )
    det = matrix.determinant(det_bound)
    report: dict = {
        "schema": SCHEMA,
        "kind": "analysis",
        "matrix": {
            "rows": matrix.rows,
            "cols": matrix.cols,
            "text": format_matrix(matrix),
            "entries": matrix_to_json(matrix)["entries"],
        },
        "trace": matrix.trace().token(),
        "determinant": {
            "value": det.value.token(),
            "dominant_permutations": [
                format_permutation(p) for p in det.dominant_permutations
            ],
            "nonsingular": det.nonsingular,
            "strictly_singular": det.strictly_singular,
        },
        "char_poly": {
            "text": spec.polynomial.text(),
            "coefficients": [
                {
                    "k": k,
                    "value": coeff.value.token(),
                    "index_set": _indices_1based(coeff.index_set),
                }
                for k, coeff in enumerate(spec.char.coefficients)
            ],
        },
        "essential_poly": spec.essential.text(),
        "eigenvalues": [
            {
                "value": ev.value.token(),
                "multiplicity": ev.multiplicity,
                "index_diff": _indices_1based(ev.index_diff),
            }
            for ev in spec.eigenvalues
        ],
        "ghost_eigenvalue_stretches": [
            {"low": _interval_token(s.low), "high": _interval_token(s.high)}
            for s in spec.ghost_stretches
        ],
        "zero_eigenvalue_multiplicity": (
            spec.zero_eigenvalue_multiplicity if det.strictly_singular else 0
        ),
        "eigenvectors": [
            {
                "eigenvalue": record.eigenvalue.token(),
                "column": record.column + 1,
                "vector": [x.token() for x in record.vector],
                "verified": record.verified,
            }
            for record in spec.eigenvectors
        ],
        "difference_criterion": spec.difference_criterion,
    }
    if spec.matrix_W is not None:
        report["eigenvector_matrix"] = {"text": format_matrix(spec.matrix_W)}
    else:
        report["eigenvector_matrix"] = None
    if spec.dependence is not None:
        verdict = spec.dependence
        report["dependence"] = {
            "dependent": verdict.dependent,
            "method": verdict.method,
            "det_W": verdict.det.value.token() if verdict.det else None,
            "det_W_permutations": (
                [format_permutation(p) for p in verdict.det.dominant_permutations]
                if verdict.det
                else None
            ),
            "independent_minor_rows": _indices_1based(verdict.independent_minor_rows),
            "witness": (
                [x.token() for x in verdict.witness] if verdict.witness else None
            ),
        }
    else:
        report["dependence"] = None
    if include_adjoint:
        adj = matrix.adjoint(det_bound)
        report["adjoint"] = {"text": format_matrix(adj)}
        if det.nonsingular:
            report["quasi_inverse"] = {
                "text": format_matrix(adj.scale(det.value.inverse()))
            }
        else:
            report["quasi_inverse"] = None
    if include_generalized:
        try:
            subs = generalized_subspaces(matrix, det_bound, char_bound)
            report["generalized_subspaces"] = [
                {
                    "eigenvalue": s.eigenvalue.token(),
                    "multiplicity": s.multiplicity,
                    "generators": {"text": format_matrix(s.generators)},
                    "representative": [x.token() for x in s.representative],
                }
                for s in subs
            ]
        except FactorizationError as exc:
            report["generalized_subspaces"] = {"unavailable": str(exc)}
    return report


def render_analysis(report: dict) -> str:
    lines: list[str] = []
    lines.append("matrix:")
    lines.extend("  " + line for line in report["matrix"]["text"].splitlines())
    lines.append(f"trace: {report['trace']}")
    det = report["determinant"]
    perms = ", ".join(det["dominant_permutations"]) or "none"
    lines.append(
        f"determinant: {det['value']}  (dominant permutations: {perms})"
    )
    lines.append(
        "singularity: "
        + (
            "nonsingular"
            if det["nonsingular"]
            else ("strictly singular" if det["strictly_singular"] else "singular (ghost)")
        )
    )
    lines.append(f"characteristic polynomial: {report['char_poly']['text']}")
    for coeff in report["char_poly"]["coefficients"]:
        index_set = coeff["index_set"]
        shown = "{" + ", ".join(str(i) for i in index_set) + "}" if index_set else "ambiguous"
        lines.append(f"  alpha_{coeff['k']} = {coeff['value']}   index set: {shown}")
    lines.append(f"essential polynomial: {report['essential_poly']}")
    if report["eigenvalues"]:
        lines.append("eigenvalues:")
        for ev in report["eigenvalues"]:
            diff = ev["index_diff"]
            shown = "{" + ", ".join(str(i) for i in diff) + "}" if diff else "ambiguous"
            lines.append(
                f"  {ev['value']}  multiplicity {ev['multiplicity']}  columns {shown}"
            )
    else:
        lines.append("eigenvalues: none (no corner roots)")
    for stretch in report["ghost_eigenvalue_stretches"]:
        low = stretch["low"] if stretch["low"] is not None else "-inf"
        high = stretch["high"] if stretch["high"] is not None else "+inf"
        lines.append(f"ghost eigenvalue stretch: [{low}, {high}]")
    if report["zero_eigenvalue_multiplicity"]:
        lines.append(
            f"zero eigenvalue multiplicity: {report['zero_eigenvalue_multiplicity']}"
        )
    if report["eigenvectors"]:
        lines.append("eigenvectors (tangible adjoint columns):")
        for record in report["eigenvectors"]:
            vec = "(" + ", ".join(record["vector"]) + ")"
            verified = "" if record["verified"] else "  UNVERIFIED"
            lines.append(
                f"  eigenvalue {record['eigenvalue']}  column {record['column']}: {vec}{verified}"
            )
    if report["eigenvector_matrix"] is not None:
        lines.append("eigenvector matrix W:")
        lines.extend(
            "  " + line for line in report["eigenvector_matrix"]["text"].splitlines()
        )
    dependence = report["dependence"]
    if dependence is not None:
        verdict = "dependent" if dependence["dependent"] else "independent"
        detail = []
        if dependence["det_W"] is not None:
            detail.append(f"det(W) = {dependence['det_W']}")
            if dependence["det_W_permutations"]:
                detail.append(
                    "by " + " and ".join(dependence["det_W_permutations"])
                )
        if dependence["independent_minor_rows"]:
            rows = ", ".join(str(i) for i in dependence["independent_minor_rows"])
            detail.append(f"tangible minor on rows {{{rows}}}")
        if dependence["witness"]:
            detail.append(
                "witness (" + ", ".join(dependence["witness"]) + ")"
            )
        suffix = "  (" + "; ".join(detail) + ")" if detail else ""
        lines.append(f"eigenvector dependence: {verdict}{suffix}")
    else:
        lines.append("eigenvector dependence: not fully extractable")
    criterion = report["difference_criterion"]
    lines.append(
        "difference criterion: "
        + ("satisfied" if criterion else "violated" if criterion is False else "unknown")
    )
    if "adjoint" in report:
        lines.append("adjoint:")
        lines.extend("  " + line for line in report["adjoint"]["text"].splitlines())
        if report.get("quasi_inverse"):
            lines.append("quasi-inverse:")
            lines.extend(
                "  " + line for line in report["quasi_inverse"]["text"].splitlines()
            )
        else:
            lines.append("quasi-inverse: unavailable (determinant not tangible)")
    generalized = report.get("generalized_subspaces")
    if generalized is not None:
        if isinstance(generalized, dict):
            lines.append(f"generalized eigenspaces: {generalized['unavailable']}")
        else:
            lines.append("generalized eigenspaces:")
            for sub in generalized:
                rep_vec = "(" + ", ".join(sub["representative"]) + ")"
                lines.append(
                    f"  eigenvalue {sub['eigenvalue']} (multiplicity {sub['multiplicity']}),"
                    f" representative {rep_vec}, generators:"
                )
                lines.extend(
                    "    " + line
                    for line in sub["generators"]["text"].splitlines()
                )
    return "\n".join(lines)


def render_law_reports(document: dict) -> str:
    lines = [f"seed: {document['seed']}"]
    for name, report in document["suites"].items():
        lines.append(
            f"{name}: {report['status'].upper()}  "
            f"trials {report['trials_run']}/{report['config']['trials']}  "
            f"attempts {report['attempts']}  violations {len(report['violations'])}"
        )
        for key in sorted(report["stats"]):
            lines.append(f"  {key}: {report['stats'][key]}")
        for note in report["notes"]:
            lines.append(f"  note: {note}")
        for violation in report["violations"][:5]:
            lines.append(f"  violation: {json.dumps(violation, sort_keys=True)}")
        if report.get("counterexamples"):
            lines.append(f"  counterexamples: {len(report['counterexamples'])}")
    lines.append("result: " + ("PASS" if document["all_passed"] else "FAIL"))
    return "\n".join(lines)


def _config_from_args(args) -> TrialConfig:
    seed = args.seed
    if seed is None:
        seed = int(os.environ.get(SEED_ENV_VAR, "0"))
    return TrialConfig(
        n=args.n,
        trials=args.trials,
        value_range=(args.value_range[0], args.value_range[1]),
        zero_density=args.zero_density,
        ghost_density=args.ghost_density,
        master_seed=seed,
        m_max=args.m_max,
    )


def _add_config_flags(parser: argparse.ArgumentParser, n_default: int, trials_default: int):
    parser.add_argument("--n", type=int, default=n_default, help="matrix size")
    parser.add_argument("--trials", type=int, default=trials_default)
    parser.add_argument(
        "--seed",
        type=int,
        default=None,
        help=f"master seed (default: ${SEED_ENV_VAR} or 0)",
    )
    parser.add_argument(
        "--value-range",
        type=int,
        nargs=2,
        default=(-10, 10),
        metavar=("LOW", "HIGH"),
        help="inclusive integer bounds for random magnitudes",
    )
    parser.add_argument("--zero-density", type=float, default=0.2)
    parser.add_argument("--ghost-density", type=float, default=0.1)
    parser.add_argument("--m-max", type=int, default=None, help="power cap for strong nonsingularity")
    parser.add_argument("--json", action="store_true", help="emit the structured document")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="supertropical",
        description="Exact ghost-layered max-plus linear algebra toolkit",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    analyze = sub.add_parser("analyze", help="analyze a matrix file")
    analyze.add_argument("matrix", help="path to a matrix text file")
    analyze.add_argument("--json", action="store_true", help="emit the structured document")
    analyze.add_argument("--adjoint", action="store_true", help="include adjoint and quasi-inverse")
    analyze.add_argument(
        "--generalized", action="store_true", help="include generalized eigenspace summary"
    )
    analyze.add_argument("--det-bound", type=int, default=DEFAULT_DET_BOUND)
    analyze.add_argument("--char-bound", type=int, default=DEFAULT_CHAR_BOUND)

    verify = sub.add_parser("verify", help="run randomized law suites")
    verify.add_argument(
        "suites",
        nargs="*",
        help=f"suite names (default: all theorem suites: {', '.join(THEOREM_SUITES)})",
    )
    _add_config_flags(verify, n_default=3, trials_default=100)

    experiment = sub.add_parser("experiment", help="run the conjecture experiment")
    _add_config_flags(experiment, n_default=4, trials_default=5)
    experiment.set_defaults(zero_density=0.45, ghost_density=0.0, value_range=(0, 10))
    experiment.add_argument(
        "--outdir", default=".", help="directory for counterexample matrix files"
    )
    return parser


def _cmd_analyze(args) -> int:
    try:
        text = Path(args.matrix).read_text()
    except OSError as exc:
        print(f"error: cannot read {args.matrix}: {exc}", file=sys.stderr)
        return EXIT_PARSE_ERROR
    try:
        matrix = parse_matrix(text)
    except MatrixParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE_ERROR
    try:
        report = build_analysis(
            matrix,
            include_adjoint=args.adjoint,
            include_generalized=args.generalized,
            det_bound=args.det_bound,
            char_bound=args.char_bound,
        )
    except SizeBoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SIZE_BOUND
    except (ValueError, NonInvertibleError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE_ERROR
    if args.json:
        print(json.dumps(report, indent=2))
    else:
        print(render_analysis(report))
    return EXIT_OK


def _law_document(cfg: TrialConfig, reports) -> dict:
    return {
        "schema": SCHEMA,
        "kind": "verification",
        "seed": cfg.master_seed,
        "suites": {name: report.to_json() for name, report in reports.items()},
        "all_passed": all(
            report.status in ("pass", "report") for report in reports.values()
        ),
    }


def _cmd_verify(args) -> int:
    cfg = _config_from_args(args)
    names = args.suites or None
    try:
        reports = run_suites(names, cfg)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE_ERROR
    document = _law_document(cfg, reports)
    if args.json:
        print(json.dumps(document, indent=2))
    else:
        print(render_law_reports(document))
    return EXIT_OK if document["all_passed"] else EXIT_SUITE_FAILURE


def _cmd_experiment(args) -> int:
    cfg = _config_from_args(args)
    report = conjecture_experiment(cfg)
    document = _law_document(cfg, {"conjecture": report})
    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    written = []
    for idx, counterexample in enumerate(report.counterexamples):
        path = outdir / f"counterexample_{idx:03d}.txt"
        claims = ", ".join(counterexample["failed"])
        path.write_text(
            f"# conjecture counterexample (trial {counterexample['trial']}): {claims}\n"
            + counterexample["matrix"]
            + "\n"
        )
        written.append(str(path))
    document["counterexample_files"] = written
    if args.json:
        print(json.dumps(document, indent=2))
    else:
        print(render_law_reports(document))
        for path in written:
            print(f"wrote {path}")
    return EXIT_OK


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "analyze":
        return _cmd_analyze(args)
    if args.command == "verify":
        return _cmd_verify(args)
    if args.command == "experiment":
        return _cmd_experiment(args)
    raise AssertionError(f"unhandled command {args.command!r}")


if __name__ == "__main__":
    sys.exit(main())
