"""Render a pipeline :class:`~greyrank.pipeline.Report` as text, CSV, or JSON.

All three renderers are deterministic: the same report always produces the
same bytes, so outputs can be diffed or checked into golden files.
"""

from __future__ import annotations

import csv
import io
import json

import numpy as np

from .errors import ValidationError
from .pipeline import Report

__all__ = ["FORMATS", "emit_report", "render_text", "render_csv", "render_json"]

FORMATS = ("text", "csv", "json-report")


def _fmt(value: float) -> str:
    return f"{float(value):.6f}"


def _ranking_line(plans: list[str], ranks: np.ndarray) -> str:
    """Render a ranking as ``G2 > G5 = G1 > G3``, ties joined with ``=``."""
    order = sorted(range(len(plans)), key=lambda i: (ranks[i], i))
    parts = [plans[order[0]]]
    for prev, cur in zip(order, order[1:]):
        parts.append("=" if ranks[cur] == ranks[prev] else ">")
        parts.append(plans[cur])
    return " ".join(parts)


def render_text(report: Report) -> str:
    lines: list[str] = []
    out = lines.append
    n = len(report.plans)

    out(f"greyrank report: {report.name}")
    out(f"plans: {n}   attributes: {len(report.attributes)}")
    out("")
    out("parameters in force:")
    out(f"  rho = {report.params.rho:g}")
    out(
        f"  theta_plus = {report.params.theta_plus:g}   "
        f"theta_minus = {report.params.theta_minus:g}"
    )
    out(
        "  borda method weights = "
        + ", ".join(f"{w:g}" for w in report.borda_config.method_weights)
    )
    out(f"  tie break = {report.borda_config.tie_break}")
    out(f"  subjective weights from: {report.subjective_source}")
    if report.aliases:
        pairs = ", ".join(f"{k!r} -> {v!r}" for k, v in sorted(report.aliases.items()))
        out(f"  linguistic aliases: {pairs}")
    out(
        "  attribute directions: "
        + ", ".join(f"{a.id}={a.direction}" for a in report.attributes)
    )
    if report.notes:
        out("notes:")
        for note in report.notes:
            out(f"  - {note}")
    out("")

    out("interval weights (subjective x objective):")
    out(f"  {'attribute':<12} {'alpha':>19} {'beta':>19} {'final':>19}")
    for j, attr in enumerate(report.attributes):
        a = report.weights.alpha[j]
        b = report.weights.beta_interval[j]
        w = report.weights.w_final[j]
        out(
            f"  {attr.id:<12} [{a.lo:.4f}, {a.hi:.4f}]  "
            f"[{b.lo:.4f}, {b.hi:.4f}]  [{w.lo:.4f}, {w.hi:.4f}]"
        )
    out("")

    out("method scores (rows are plans):")
    header = f"  {'plan':<10}" + "".join(f"{ms.method:>16}" for ms in report.methods)
    out(header)
    for i, plan in enumerate(report.plans):
        row = f"  {plan:<10}" + "".join(f"{_fmt(ms.scores[i]):>16}" for ms in report.methods)
        out(row)
    out("")

    gp, gm = report.incidence["gplus"], report.incidence["gminus"]
    out("incidence degrees against the ideals:")
    out(f"  {'plan':<10}{'positive':>16}{'negative':>16}")
    for i, plan in enumerate(report.plans):
        out(f"  {plan:<10}{_fmt(gp[i]):>16}{_fmt(gm[i]):>16}")
    out(
        "  max-entropy pair weights: "
        f"beta1 = {_fmt(report.incidence['beta1'])}, "
        f"beta2 = {_fmt(report.incidence['beta2'])}"
    )
    out("")

    for ms in report.methods:
        out(f"ranking ({ms.method}): " + _ranking_line(report.plans, ms.ranks))
    out("")

    out("weighted borda:")
    out(f"  {'plan':<10}{'borda':>12}{'tiebreak':>12}{'final rank':>12}")
    for i, plan in enumerate(report.plans):
        out(
            f"  {plan:<10}{_fmt(report.result.borda_scores[i]):>12}"
            f"{_fmt(report.result.tiebreak_scores[i]):>12}"
            f"{report.result.final_ranks[i]:>12d}"
        )
    out("")
    out("final ranking: " + " > ".join(report.final_order))
    out("")
    return "\n".join(lines)


def render_csv(report: Report) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")

    def section(title: str) -> None:
        buf.write(f"# {title}\n")

    section("parameters")
    writer.writerow(["key", "value"])
    writer.writerow(["name", report.name])
    writer.writerow(["rho", repr(report.params.rho)])
    writer.writerow(["theta_plus", repr(report.params.theta_plus)])
    writer.writerow(["theta_minus", repr(report.params.theta_minus)])
    writer.writerow(
        ["borda_weights", " ".join(repr(w) for w in report.borda_config.method_weights)]
    )
    writer.writerow(["tie_break", report.borda_config.tie_break])
    writer.writerow(["subjective_source", report.subjective_source])
    for key, value in sorted(report.aliases.items()):
        writer.writerow(["alias", f"{key} -> {value}"])
    for note in report.notes:
        writer.writerow(["note", note])
    buf.write("\n")

    section("attributes")
    writer.writerow(["id", "kind", "direction"])
    for attr in report.attributes:
        writer.writerow([attr.id, attr.kind, attr.direction])
    buf.write("\n")

    section("normalized")
    writer.writerow(["plan", "attribute", "x1", "x2", "x3", "x4"])
    for i, plan in enumerate(report.plans):
        for j, attr in enumerate(report.attributes):
            writer.writerow([plan, attr.id] + [_fmt(v) for v in report.normalized[i, j]])
    buf.write("\n")

    section("weights")
    writer.writerow(
        ["attribute", "alpha_lo", "alpha_hi", "beta_opt",
         "beta_ent_1", "beta_ent_2", "beta_ent_3", "beta_ent_4",
         "beta_lo", "beta_hi", "w_lo", "w_hi"]
    )
    for j, attr in enumerate(report.attributes):
        a = report.weights.alpha[j]
        b = report.weights.beta_interval[j]
        w = report.weights.w_final[j]
        writer.writerow(
            [attr.id, _fmt(a.lo), _fmt(a.hi), _fmt(report.weights.beta_opt[j])]
            + [_fmt(report.weights.beta_ent[k, j]) for k in range(4)]
            + [_fmt(b.lo), _fmt(b.hi), _fmt(w.lo), _fmt(w.hi)]
        )
    buf.write("\n")

    section("ideal_vectors")
    writer.writerow(["attribute", "bound", "y1", "y2", "y3", "y4"])
    for j, attr in enumerate(report.attributes):
        writer.writerow([attr.id, "positive"] + [_fmt(v) for v in report.ideals.positive[j]])
        writer.writerow([attr.id, "negative"] + [_fmt(v) for v in report.ideals.negative[j]])
    buf.write("\n")

    section("incidence")
    writer.writerow(["plan", "gplus", "gminus"])
    gp, gm = report.incidence["gplus"], report.incidence["gminus"]
    for i, plan in enumerate(report.plans):
        writer.writerow([plan, _fmt(gp[i]), _fmt(gm[i])])
    writer.writerow(["beta1", _fmt(report.incidence["beta1"]), ""])
    writer.writerow(["beta2", _fmt(report.incidence["beta2"]), ""])
    buf.write("\n")

    for ms in report.methods:
        section(f"method {ms.method}")
        writer.writerow(["plan", "score", "rank"])
        for i, plan in enumerate(report.plans):
            writer.writerow([plan, _fmt(ms.scores[i]), int(ms.ranks[i])])
        buf.write("\n")

    section("borda")
    writer.writerow(["plan", "borda_score", "tiebreak_score", "final_rank"])
    for i, plan in enumerate(report.plans):
        writer.writerow(
            [plan, _fmt(report.result.borda_scores[i]),
             _fmt(report.result.tiebreak_scores[i]), int(report.result.final_ranks[i])]
        )
    buf.write("\n")

    section("final_ranking")
    writer.writerow(["position", "plan"])
    for pos, plan in enumerate(report.final_order, start=1):
        writer.writerow([pos, plan])

    return buf.getvalue()


def render_json(report: Report) -> str:
    return json.dumps(report.to_dict(), indent=2, sort_keys=True) + "\n"


def emit_report(report: Report, fmt: str = "text") -> bytes:
    """Render ``report`` in the requested format and return UTF-8 bytes."""
    if fmt == "text":
        text = render_text(report)
    elif fmt == "csv":
        text = render_csv(report)
    elif fmt == "json-report":
        text = render_json(report)
    else:
        raise ValidationError(f"unknown report format {fmt!r}; expected one of {FORMATS}")
    return text.encode("utf-8")
