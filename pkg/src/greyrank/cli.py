"""Command-line interface.

::

    greyrank solve problem.json [--format text|csv|json-report]
                                [--rho R] [--theta-plus T]
                                [--borda-weights w1,w2,w3,w4]
                                [--out PATH]

Exit codes: 0 on success, 2 for validation problems (bad file, bad cell,
bad flag value), 3 when the problem is degenerate (well-formed input on
which the method itself breaks down).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .errors import DegenerateProblemError, ValidationError
from .pipeline import run_pipeline
from .problem import parse_problem_dict
from .report import FORMATS, emit_report

__all__ = ["main", "build_parser"]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="greyrank",
        description="Rank decision plans with mixed-type attributes via "
        "grey relational analysis.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    solve = sub.add_parser("solve", help="run the full ranking pipeline on a problem file")
    solve.add_argument("file", help="problem file (JSON, schema 1)")
    solve.add_argument("--format", choices=FORMATS, default="text", help="output format")
    solve.add_argument("--rho", type=float, default=None, help="distinguishing coefficient in (0, 1)")
    solve.add_argument(
        "--theta-plus",
        type=float,
        default=None,
        help="weight on the positive ideal; theta_minus becomes 1 - theta_plus",
    )
    solve.add_argument(
        "--borda-weights",
        default=None,
        metavar="W1,W2,W3,W4",
        help="comma-separated weights for the four methods (must sum to 1)",
    )
    solve.add_argument("--out", default=None, help="write the report here instead of stdout")
    return parser


def _parse_borda_weights(text: str) -> list[float]:
    parts = text.split(",")
    if len(parts) != 4:
        raise ValidationError(
            f"--borda-weights needs exactly 4 comma-separated values, got {len(parts)}"
        )
    try:
        return [float(p) for p in parts]
    except ValueError as exc:
        raise ValidationError(f"--borda-weights: {exc}") from exc


def _apply_overrides(data: dict, args: argparse.Namespace) -> dict:
    """Fold CLI flags into the problem document before validation.

    Overriding the document (rather than the parsed problem) keeps the
    params echoed in reports consistent with what actually ran, so a
    json-report fed back through ``solve`` reproduces the same ranking.
    """
    if not isinstance(data, dict):
        return data
    params = dict(data.get("params") or {})
    if args.rho is not None:
        params["rho"] = args.rho
    if args.theta_plus is not None:
        params["theta_plus"] = args.theta_plus
        params["theta_minus"] = 1.0 - args.theta_plus
    if args.borda_weights is not None:
        params["borda_weights"] = _parse_borda_weights(args.borda_weights)
    if params:
        data = dict(data)
        data["params"] = params
    return data


def _load_document(path: Path) -> dict:
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ValidationError(f"cannot read problem file {path}: {exc}") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"{path}: invalid JSON: {exc}") from exc
    if isinstance(data, dict) and "problem" in data and "final_ranking" in data:
        # A json-report was produced by us; solve its embedded problem.
        data = data["problem"]
    return data


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        data = _load_document(Path(args.file))
        data = _apply_overrides(data, args)
        problem = parse_problem_dict(data, source=args.file)
        report = run_pipeline(problem)
        payload = emit_report(report, args.format)
    except ValidationError as exc:
        print(f"greyrank: error: {exc}", file=sys.stderr)
        return 2
    except DegenerateProblemError as exc:
        print(f"greyrank: degenerate problem: {exc}", file=sys.stderr)
        return 3

    if args.out:
        try:
            Path(args.out).write_bytes(payload)
        except OSError as exc:
            print(f"greyrank: error: cannot write {args.out}: {exc}", file=sys.stderr)
            return 2
    else:
        sys.stdout.buffer.write(payload)
        sys.stdout.buffer.flush()
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
