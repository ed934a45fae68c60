"""Type- and direction-aware normalization of raw decision columns.

Every column is normalized against its own column sums so the result is
dimensionless and scale-invariant:

* benefit interval (reals are degenerate intervals): lo_i / sum(hi),
  hi_i / sum(lo)
* cost interval: reciprocals with a bound swap, (1/hi_i) / sum(1/lo),
  (1/lo_i) / sum(1/hi), which keeps lower <= upper
* linguistic triangle (L, M, U): every component over sum(M)
* uncertain trapezoid (L, a, b, U): (L, a) over sum(a) and (b, U) over sum(b)

Cost-direction linguistic and uncertain columns are first mirrored on the
term scale (index -> -index) and then normalized as benefit columns.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import DegenerateProblemError, ValidationError
from .values import (
    GeneralizedValue,
    IntervalCell,
    LinguisticCell,
    RawCell,
    RealCell,
    UncertainCell,
    term_to_triangle,
)

__all__ = ["AttributeSpec", "KINDS", "DIRECTIONS", "normalize_column", "normalize_matrix"]

KINDS = ("real", "interval", "linguistic", "uncertain-linguistic")
DIRECTIONS = ("benefit", "cost")

_KIND_TO_CLASS = {
    "real": RealCell,
    "interval": IntervalCell,
    "linguistic": LinguisticCell,
    "uncertain-linguistic": UncertainCell,
}


@dataclass(frozen=True)
class AttributeSpec:
    """Identity, value kind, and optimization direction of one attribute."""

    id: str
    kind: str
    direction: str

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise ValidationError(
                f"attribute {self.id!r}: unknown kind {self.kind!r}; expected one of {KINDS}"
            )
        if self.direction not in DIRECTIONS:
            raise ValidationError(
                f"attribute {self.id!r}: unknown direction {self.direction!r}; "
                f"expected one of {DIRECTIONS}"
            )


def _check_kinds(cells: Sequence[RawCell], spec: AttributeSpec) -> None:
    want = _KIND_TO_CLASS[spec.kind]
    for i, cell in enumerate(cells):
        if not isinstance(cell, want):
            raise ValidationError(
                f"attribute {spec.id!r}, row {i}: cell {cell!r} does not match "
                f"declared kind {spec.kind!r}"
            )


def _interval_bounds(cells: Sequence[RawCell]) -> tuple[np.ndarray, np.ndarray]:
    lo = np.empty(len(cells))
    hi = np.empty(len(cells))
    for i, cell in enumerate(cells):
        if isinstance(cell, RealCell):
            lo[i] = hi[i] = cell.value
        else:
            lo[i] = cell.lo  # type: ignore[union-attr]
            hi[i] = cell.hi  # type: ignore[union-attr]
    return lo, hi


def _normalize_interval(lo: np.ndarray, hi: np.ndarray, spec: AttributeSpec) -> np.ndarray:
    if spec.direction == "cost":
        if (lo <= 0).any():
            bad = int(np.argmax(lo <= 0))
            raise ValidationError(
                f"attribute {spec.id!r}, row {bad}: cost column requires strictly "
                f"positive values, got {lo[bad]}"
            )
        inv_lo_sum = (1.0 / lo).sum()
        inv_hi_sum = (1.0 / hi).sum()
        x_lo = (1.0 / hi) / inv_lo_sum
        x_hi = (1.0 / lo) / inv_hi_sum
    else:
        if (lo < 0).any():
            bad = int(np.argmax(lo < 0))
            raise ValidationError(
                f"attribute {spec.id!r}, row {bad}: negative value {lo[bad]} in a "
                f"benefit column is not supported"
            )
        lo_sum = lo.sum()
        hi_sum = hi.sum()
        if lo_sum <= 0:
            raise DegenerateProblemError(
                f"attribute {spec.id!r}: benefit column sums to zero"
            )
        x_lo = lo / hi_sum
        x_hi = hi / lo_sum
    return np.stack([x_lo, x_lo, x_hi, x_hi], axis=1)


def _normalize_linguistic(cells: Sequence[LinguisticCell], spec: AttributeSpec) -> np.ndarray:
    terms = [c.term for c in cells]
    if spec.direction == "cost":
        terms = [t.complement() for t in terms]
    tri = np.array([term_to_triangle(t) for t in terms])  # (n, 3) = L, M, U
    mid_sum = tri[:, 1].sum()
    if mid_sum <= 0:
        raise DegenerateProblemError(
            f"attribute {spec.id!r}: linguistic column midpoints sum to zero"
        )
    scaled = tri / mid_sum
    return scaled[:, [0, 1, 1, 2]]


def _normalize_uncertain(cells: Sequence[UncertainCell], spec: AttributeSpec) -> np.ndarray:
    pairs = [(c.lower, c.upper) for c in cells]
    if spec.direction == "cost":
        # Mirroring reverses order, so the bounds swap roles.
        pairs = [(up.complement(), lo.complement()) for lo, up in pairs]
    trap = np.empty((len(pairs), 4))
    for i, (lo_term, up_term) in enumerate(pairs):
        alo, amid, _ = term_to_triangle(lo_term)
        _, bmid, bup = term_to_triangle(up_term)
        trap[i] = (alo, amid, bmid, bup)
    lower_sum = trap[:, 1].sum()
    upper_sum = trap[:, 2].sum()
    if lower_sum <= 0 or upper_sum <= 0:
        raise DegenerateProblemError(
            f"attribute {spec.id!r}: uncertain linguistic column midpoints sum to zero"
        )
    return trap / np.array([lower_sum, lower_sum, upper_sum, upper_sum])


def normalize_column(cells: Sequence[RawCell], spec: AttributeSpec) -> list[GeneralizedValue]:
    """Normalize one raw column into dimensionless 4-tuples.

    The ascending ordering of each output tuple is enforced by a final sort.
    For interval and linguistic rules the components are already ordered and
    the sort only guards against floating-point inversions; trapezoid columns
    can produce genuine inversions (a degenerate uncertain cell next to wide
    ones), which the sort repairs as well.
    """
    if len(cells) == 0:
        raise ValidationError(f"attribute {spec.id!r}: empty column")
    _check_kinds(cells, spec)
    if spec.kind in ("real", "interval"):
        lo, hi = _interval_bounds(cells)
        out = _normalize_interval(lo, hi, spec)
    elif spec.kind == "linguistic":
        out = _normalize_linguistic(cells, spec)  # type: ignore[arg-type]
    else:
        out = _normalize_uncertain(cells, spec)  # type: ignore[arg-type]
    out = np.sort(out, axis=1)
    return [GeneralizedValue(*row) for row in out]


def normalize_matrix(
    cells: Sequence[Sequence[RawCell]], specs: Sequence[AttributeSpec]
) -> np.ndarray:
    """Normalize an n x m raw matrix column by column into shape (n, m, 4)."""
    if len(cells) == 0:
        raise ValidationError("decision matrix has no plans")
    if len(specs) == 0:
        raise ValidationError("decision matrix has no attributes")
    for i, row in enumerate(cells):
        if len(row) != len(specs):
            raise ValidationError(
                f"plan row {i} has {len(row)} cells, expected {len(specs)}"
            )
    out = np.empty((len(cells), len(specs), 4))
    for j, spec in enumerate(specs):
        column = [row[j] for row in cells]
        for i, value in enumerate(normalize_column(column, spec)):
            out[i, j] = value.as_tuple()
    return out
