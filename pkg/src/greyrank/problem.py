"""Problem-file ingestion and validation.

Problem files are JSON documents with ``"schema": 1``:

* ``plans`` — list of plan names.
* ``attributes`` — list of ``{"id", "kind", "direction"}`` where kind is one
  of ``real | interval | linguistic | uncertain-linguistic`` and direction is
  ``benefit | cost``.
* ``matrix`` — n rows of m cells. Cells are tagged unions: a bare number or
  ``{"real": 3610}``, ``{"interval": [465, 485]}``, ``{"ling": "high"}``, or
  ``{"uncertain": ["a little high", "high"]}``.
* ``subjective_weights`` — either ``{"experts": [[...], ...]}`` (one weight
  vector per expert, enveloped coordinatewise) or
  ``{"intervals": [[lo, hi], ...]}`` giving the envelope directly.
* ``preferences`` — one ascending 4-tuple per plan, the decision maker's
  prior preference for that plan.
* ``params`` — optional: ``rho``, ``theta_plus``, ``theta_minus``,
  ``borda_weights`` (4 values), ``tie_break``.
* ``linguistic_aliases`` — optional extra label spellings, mapped onto the
  canonical 11-term scale.
* ``name``, ``notes`` — optional free text.

Every violation is reported with the plan/attribute location that caused it.
"""

from __future__ import annotations

import copy
import json
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .aggregate import BordaConfig
from .errors import ValidationError
from .evaluate import MethodParams
from .normalize import AttributeSpec
from .values import (
    GeneralizedValue,
    IntervalCell,
    IntervalGreyNumber,
    LinguisticCell,
    LinguisticTerm,
    RawCell,
    RealCell,
    UncertainCell,
)
from .weights import subjective_interval_weights

__all__ = ["DecisionProblem", "parse_problem", "parse_problem_dict"]

SCHEMA_VERSION = 1

_TOP_LEVEL_KEYS = {
    "schema",
    "name",
    "notes",
    "plans",
    "attributes",
    "matrix",
    "subjective_weights",
    "preferences",
    "params",
    "linguistic_aliases",
}

_PARAM_KEYS = {"rho", "theta_plus", "theta_minus", "borda_weights", "tie_break"}


@dataclass
class DecisionProblem:
    """A fully validated decision problem, ready for the pipeline."""

    name: str
    plans: list[str]
    attributes: list[AttributeSpec]
    cells: list[list[RawCell]]
    subjective: list[IntervalGreyNumber]
    subjective_source: str  # "experts" | "intervals"
    preferences: np.ndarray  # (n, 4)
    params: MethodParams
    borda: BordaConfig
    aliases: dict[str, str]
    payload: dict  # the validated problem document, echoed into reports

    @property
    def n_plans(self) -> int:
        return len(self.plans)

    @property
    def n_attributes(self) -> int:
        return len(self.attributes)


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise ValidationError(message)


def _as_number(value, where: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ValidationError(f"{where}: expected a number, got {value!r}")
    return float(value)


def _parse_cell(raw, kind: str, aliases: dict[str, str], where: str) -> RawCell:
    try:
        if kind == "real":
            if isinstance(raw, dict):
                if set(raw) != {"real"}:
                    raise ValidationError(
                        f"{where}: real cell must be a number or {{\"real\": v}}, got {raw!r}"
                    )
                raw = raw["real"]
            return RealCell(_as_number(raw, where))
        if kind == "interval":
            if not (isinstance(raw, dict) and set(raw) == {"interval"}):
                raise ValidationError(
                    f"{where}: interval cell must look like {{\"interval\": [lo, hi]}}, "
                    f"got {raw!r}"
                )
            bounds = raw["interval"]
            if not (isinstance(bounds, list) and len(bounds) == 2):
                raise ValidationError(f"{where}: interval needs exactly two bounds, got {bounds!r}")
            return IntervalCell(_as_number(bounds[0], where), _as_number(bounds[1], where))
        if kind == "linguistic":
            if not (isinstance(raw, dict) and set(raw) == {"ling"} and isinstance(raw["ling"], str)):
                raise ValidationError(
                    f"{where}: linguistic cell must look like {{\"ling\": \"high\"}}, got {raw!r}"
                )
            return LinguisticCell(LinguisticTerm.from_label(raw["ling"], aliases))
        # uncertain-linguistic
        if not (isinstance(raw, dict) and set(raw) == {"uncertain"}):
            raise ValidationError(
                f"{where}: uncertain cell must look like "
                f"{{\"uncertain\": [\"low\", \"high\"]}}, got {raw!r}"
            )
        pair = raw["uncertain"]
        if not (isinstance(pair, list) and len(pair) == 2 and all(isinstance(t, str) for t in pair)):
            raise ValidationError(f"{where}: uncertain cell needs two term labels, got {pair!r}")
        return UncertainCell(
            LinguisticTerm.from_label(pair[0], aliases),
            LinguisticTerm.from_label(pair[1], aliases),
        )
    except ValidationError as exc:
        if str(exc).startswith(where):
            raise
        raise ValidationError(f"{where}: {exc}") from exc


def _parse_aliases(data) -> dict[str, str]:
    if data is None:
        return {}
    _require(isinstance(data, dict), "linguistic_aliases must be an object")
    aliases: dict[str, str] = {}
    for key, value in data.items():
        _require(
            isinstance(key, str) and isinstance(value, str),
            f"linguistic_aliases entry {key!r}: both sides must be strings",
        )
        # The target must itself resolve on the canonical scale.
        LinguisticTerm.from_label(value)
        aliases[" ".join(key.strip().lower().split())] = value
    return aliases


def _parse_subjective(data, m: int) -> tuple[list[IntervalGreyNumber], str]:
    _require(isinstance(data, dict), "subjective_weights must be an object")
    keys = set(data)
    if keys == {"experts"}:
        vectors = data["experts"]
        _require(
            isinstance(vectors, list) and len(vectors) >= 1,
            "subjective_weights.experts must be a nonempty list of weight vectors",
        )
        for i, vec in enumerate(vectors):
            _require(
                isinstance(vec, list) and len(vec) == m,
                f"expert vector {i} must list {m} weights",
            )
        return subjective_interval_weights(vectors), "experts"
    if keys == {"intervals"}:
        intervals = data["intervals"]
        _require(
            isinstance(intervals, list) and len(intervals) == m,
            f"subjective_weights.intervals must list {m} [lo, hi] pairs",
        )
        out = []
        for j, pair in enumerate(intervals):
            _require(
                isinstance(pair, list) and len(pair) == 2,
                f"subjective weight {j} must be a [lo, hi] pair",
            )
            try:
                out.append(
                    IntervalGreyNumber(
                        _as_number(pair[0], f"subjective weight {j}"),
                        _as_number(pair[1], f"subjective weight {j}"),
                    )
                )
            except ValidationError as exc:
                raise ValidationError(f"subjective weight {j}: {exc}") from exc
        return out, "intervals"
    raise ValidationError(
        "subjective_weights must contain exactly one of 'experts' or 'intervals'"
    )


def _parse_params(data, overrides: dict | None = None) -> tuple[MethodParams, BordaConfig]:
    params = dict(data or {})
    _require(isinstance(params, dict), "params must be an object")
    unknown = set(params) - _PARAM_KEYS
    _require(not unknown, f"unknown params keys: {sorted(unknown)}")
    if overrides:
        params.update({k: v for k, v in overrides.items() if v is not None})
    rho = _as_number(params.get("rho", 0.5), "params.rho")
    theta_plus = _as_number(params.get("theta_plus", 0.5), "params.theta_plus")
    theta_minus = _as_number(params.get("theta_minus", 1.0 - theta_plus), "params.theta_minus")
    try:
        mp = MethodParams(rho=rho, theta_plus=theta_plus, theta_minus=theta_minus)
    except ValidationError as exc:
        raise ValidationError(f"params: {exc}") from exc
    weights = params.get("borda_weights", [0.25, 0.25, 0.25, 0.25])
    _require(
        isinstance(weights, (list, tuple)) and len(weights) == 4,
        "params.borda_weights must list 4 method weights",
    )
    tie_break = params.get("tie_break", "normalized-score-sum")
    try:
        borda = BordaConfig(
            method_weights=tuple(_as_number(w, "params.borda_weights") for w in weights),
            tie_break=tie_break,
        )
    except ValidationError as exc:
        raise ValidationError(f"params: {exc}") from exc
    return mp, borda


def parse_problem_dict(data: dict, source: str = "<memory>") -> DecisionProblem:
    """Validate a problem document and build a :class:`DecisionProblem`."""
    _require(isinstance(data, dict), f"{source}: problem document must be a JSON object")
    unknown = set(data) - _TOP_LEVEL_KEYS
    _require(not unknown, f"unknown top-level keys: {sorted(unknown)}")
    schema = data.get("schema")
    _require(
        schema == SCHEMA_VERSION,
        f"missing or unsupported schema version {schema!r}; expected {SCHEMA_VERSION}",
    )

    plans = data.get("plans")
    _require(
        isinstance(plans, list) and len(plans) >= 1 and all(isinstance(p, str) for p in plans),
        "plans must be a nonempty list of names",
    )
    _require(len(set(plans)) == len(plans), "plan names must be unique")

    raw_attrs = data.get("attributes")
    _require(
        isinstance(raw_attrs, list) and len(raw_attrs) >= 1,
        "attributes must be a nonempty list",
    )
    attributes = []
    for j, entry in enumerate(raw_attrs):
        _require(
            isinstance(entry, dict) and {"id", "kind", "direction"} <= set(entry),
            f"attribute {j} must carry id, kind, and direction",
        )
        extra = set(entry) - {"id", "kind", "direction"}
        _require(not extra, f"attribute {j}: unknown keys {sorted(extra)}")
        attributes.append(AttributeSpec(entry["id"], entry["kind"], entry["direction"]))
    ids = [a.id for a in attributes]
    _require(len(set(ids)) == len(ids), "attribute ids must be unique")

    aliases = _parse_aliases(data.get("linguistic_aliases"))

    n, m = len(plans), len(attributes)
    matrix = data.get("matrix")
    _require(
        isinstance(matrix, list) and len(matrix) == n,
        f"matrix must have one row per plan ({n} rows)",
    )
    cells: list[list[RawCell]] = []
    for i, row in enumerate(matrix):
        _require(
            isinstance(row, list) and len(row) == m,
            f"plan {plans[i]!r}: matrix row must have {m} cells",
        )
        parsed_row = []
        for j, raw in enumerate(row):
            where = f"plan {plans[i]!r}, attribute {attributes[j].id!r}"
            parsed_row.append(_parse_cell(raw, attributes[j].kind, aliases, where))
        cells.append(parsed_row)

    _require("subjective_weights" in data, "subjective_weights is required")
    subjective, subjective_source = _parse_subjective(data["subjective_weights"], m)

    prefs_raw = data.get("preferences")
    _require(
        isinstance(prefs_raw, list) and len(prefs_raw) == n,
        f"preferences must list one 4-tuple per plan ({n} entries)",
    )
    prefs = np.empty((n, 4))
    for i, entry in enumerate(prefs_raw):
        try:
            prefs[i] = GeneralizedValue.from_iterable(entry).as_tuple()
        except (ValidationError, TypeError) as exc:
            raise ValidationError(f"preference for plan {plans[i]!r}: {exc}") from exc

    params, borda = _parse_params(data.get("params"))

    name = data.get("name", Path(source).stem if source else "problem")
    _require(isinstance(name, str), "name must be a string")

    return DecisionProblem(
        name=name,
        plans=list(plans),
        attributes=attributes,
        cells=cells,
        subjective=subjective,
        subjective_source=subjective_source,
        preferences=prefs,
        params=params,
        borda=borda,
        aliases=aliases,
        payload=copy.deepcopy(data),
    )


def parse_problem(path: str | Path) -> DecisionProblem:
    """Load and validate a problem file."""
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ValidationError(f"cannot read problem file {path}: {exc}") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"{path}: invalid JSON: {exc}") from exc
    return parse_problem_dict(data, source=str(path))
