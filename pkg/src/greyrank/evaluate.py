"""The four plan-scoring methods over the weighted decision matrix.

All four consume the same matrix Y: the normalized matrix blended with the
decision maker's per-plan preference tuples and scaled by the final interval
weights. TOPSIS scores closeness to the componentwise ideal rows by Euclidean
distance; the other three are built on grey incidence degrees, the mean Deng
closeness coefficient of each plan against the positive and negative ideal
vectors.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ._kernels import distance_grid
from .aggregate import scores_to_ranks
from .errors import DegenerateProblemError, ValidationError

__all__ = [
    "IdealVectors",
    "MethodParams",
    "MethodScores",
    "METHOD_NAMES",
    "apply_weights",
    "approach_with_preference",
    "blend_preference",
    "comprehensive_incidence",
    "ideal_vectors",
    "incidence_coefficients",
    "incidence_degrees",
    "max_entropy_weights",
    "membership_degrees",
    "score_all_methods",
    "topsis_scores",
]

METHOD_NAMES = ("topsis", "grey-approach", "membership", "max-entropy")


@dataclass(frozen=True)
class MethodParams:
    """Shared scoring parameters.

    ``rho`` is the distinguishing coefficient of the incidence coefficient.
    ``theta_plus``/``theta_minus`` bias the grey approach degree toward the
    positive or negative ideal; they must sum to one, and the boundary case
    theta_plus=1, theta_minus=0 switches to the plain positive incidence
    degree.
    """

    rho: float = 0.5
    theta_plus: float = 0.5
    theta_minus: float = 0.5

    def __post_init__(self) -> None:
        if not 0.0 < self.rho < 1.0:
            raise ValidationError(f"rho must lie in (0, 1), got {self.rho}")
        if not (0.0 < self.theta_plus <= 1.0 and 0.0 <= self.theta_minus < 1.0):
            raise ValidationError(
                f"preference coefficients out of range: theta_plus={self.theta_plus}, "
                f"theta_minus={self.theta_minus}"
            )
        if abs(self.theta_plus + self.theta_minus - 1.0) > 1e-9:
            raise ValidationError(
                f"preference coefficients must sum to 1, got "
                f"{self.theta_plus} + {self.theta_minus}"
            )


@dataclass
class MethodScores:
    """One method's score vector and the ranking it induces."""

    method: str
    scores: np.ndarray
    ranks: np.ndarray

    @classmethod
    def from_scores(cls, method: str, scores: np.ndarray) -> "MethodScores":
        scores = np.asarray(scores, dtype=np.float64)
        return cls(method=method, scores=scores, ranks=scores_to_ranks(scores))


@dataclass
class IdealVectors:
    """Componentwise best and worst rows of the weighted matrix, per attribute."""

    positive: np.ndarray  # (m, 4)
    negative: np.ndarray  # (m, 4)


def _check_matrix(y: np.ndarray, name: str = "matrix") -> np.ndarray:
    y = np.asarray(y, dtype=np.float64)
    if y.ndim != 3 or y.shape[2] != 4 or y.shape[0] < 1 or y.shape[1] < 1:
        raise ValidationError(f"expected a nonempty (n, m, 4) {name}, got shape {y.shape}")
    return y


def blend_preference(x: np.ndarray, preferences: np.ndarray) -> np.ndarray:
    """Average the normalized matrix with the per-plan preference tuples.

    ``preferences`` has shape (n, 4); each plan's tuple is blended into every
    attribute of its row: z = (q + x) / 2, componentwise.
    """
    x = _check_matrix(x)
    q = np.asarray(preferences, dtype=np.float64)
    if q.shape != (x.shape[0], 4):
        raise ValidationError(
            f"expected preferences of shape ({x.shape[0]}, 4), got {q.shape}"
        )
    if (np.diff(q, axis=1) < 0).any():
        raise ValidationError("preference tuples must be ascending 4-tuples")
    return 0.5 * (q[:, None, :] + x)


def apply_weights(z: np.ndarray, w_final) -> np.ndarray:
    """Scale the lower pair of each tuple by the weight's lower bound and the
    upper pair by its upper bound."""
    z = _check_matrix(z)
    if (z < 0).any():
        raise ValidationError("weighted scaling requires a nonnegative matrix")
    lo = np.array([w.lo for w in w_final])
    hi = np.array([w.hi for w in w_final])
    if lo.shape[0] != z.shape[1]:
        raise ValidationError(
            f"{lo.shape[0]} weights for {z.shape[1]} attributes"
        )
    scale = np.stack([lo, lo, hi, hi], axis=1)  # (m, 4)
    return z * scale[None, :, :]


def ideal_vectors(y: np.ndarray) -> IdealVectors:
    """Componentwise column maxima (positive) and minima (negative)."""
    y = _check_matrix(y)
    return IdealVectors(positive=y.max(axis=0), negative=y.min(axis=0))


def topsis_scores(y: np.ndarray, ideals: IdealVectors) -> MethodScores:
    """Relative closeness D- / (D+ + D-) to the ideal rows.

    When the positive and negative ideals coincide (all plans identical) every
    plan scores 0.5 by convention, a full tie.
    """
    y = _check_matrix(y)
    dpos = np.sqrt(((y - ideals.positive[None]) ** 2).sum(axis=(1, 2)))
    dneg = np.sqrt(((y - ideals.negative[None]) ** 2).sum(axis=(1, 2)))
    total = dpos + dneg
    scores = np.where(total > 0, dneg / np.where(total > 0, total, 1.0), 0.5)
    return MethodScores.from_scores("topsis", scores)


def incidence_coefficients(y: np.ndarray, ideal: np.ndarray, rho: float = 0.5) -> np.ndarray:
    """Deng incidence coefficient of every cell against the ideal vector.

    r = (d_min + rho * d_max) / (d + rho * d_max), with d_min and d_max taken
    over the full plan-by-attribute grid. All distances zero yields all ones.
    """
    if not 0.0 < rho < 1.0:
        raise ValidationError(f"rho must lie in (0, 1), got {rho}")
    y = _check_matrix(y)
    ideal = np.asarray(ideal, dtype=np.float64)
    if ideal.shape != (y.shape[1], 4):
        raise ValidationError(
            f"expected ideal vector of shape ({y.shape[1]}, 4), got {ideal.shape}"
        )
    d = distance_grid(y, ideal)
    d_max = float(d.max())
    if d_max <= 0:
        return np.ones_like(d)
    d_min = float(d.min())
    return (d_min + rho * d_max) / (d + rho * d_max)


def incidence_degrees(coefficients: np.ndarray) -> np.ndarray:
    """Row mean of incidence coefficients: one closeness degree per plan."""
    r = np.asarray(coefficients, dtype=np.float64)
    if r.ndim != 2 or r.shape[1] < 1:
        raise ValidationError(f"expected a (n, m) coefficient grid, got shape {r.shape}")
    return r.mean(axis=1)


def approach_with_preference(
    gplus: np.ndarray, gminus: np.ndarray, params: MethodParams | None = None
) -> MethodScores:
    """Grey approach degree with preference bias between the two ideals.

    C' = G+ * theta_plus / (G+ * theta_plus + G- * theta_minus); the boundary
    theta_plus=1 returns G+ itself (the ratio would degenerate to 1).
    """
    params = params or MethodParams()
    gplus = np.asarray(gplus, dtype=np.float64)
    gminus = np.asarray(gminus, dtype=np.float64)
    if params.theta_minus == 0.0:
        return MethodScores.from_scores("grey-approach", gplus.copy())
    num = gplus * params.theta_plus
    den = num + gminus * params.theta_minus
    return MethodScores.from_scores("grey-approach", num / den)


def membership_degrees(gplus: np.ndarray, gminus: np.ndarray) -> MethodScores:
    """Relative membership in the positive ideal: G+^2 / (G+^2 + G-^2).

    This is the exact minimizer of the squared-residual objective that scores
    u against G+ and (1 - u) against G-.
    """
    gplus = np.asarray(gplus, dtype=np.float64)
    gminus = np.asarray(gminus, dtype=np.float64)
    denom = gplus**2 + gminus**2
    if (denom <= 0).any():
        raise DegenerateProblemError(
            "membership degree undefined: a plan has zero incidence against both ideals"
        )
    return MethodScores.from_scores("membership", gplus**2 / denom)


def max_entropy_weights(gplus: np.ndarray, gminus: np.ndarray) -> tuple[float, float]:
    """Entropy-regularized weights of the two incidence degrees.

    Maximizing total comprehensive incidence plus the entropy of (b1, b2)
    under b1 + b2 = 1 gives the softmax of (sum G+, sum (1 - G-)), computed in
    overflow-safe form.
    """
    gplus = np.asarray(gplus, dtype=np.float64)
    gminus = np.asarray(gminus, dtype=np.float64)
    c1 = float(gplus.sum())
    c2 = float((1.0 - gminus).sum())
    t = c2 - c1
    if t >= 0:
        b1 = math.exp(-t) / (1.0 + math.exp(-t))
    else:
        b1 = 1.0 / (1.0 + math.exp(t))
    return b1, 1.0 - b1


def comprehensive_incidence(
    gplus: np.ndarray, gminus: np.ndarray, beta1: float, beta2: float
) -> MethodScores:
    """Convex mix of closeness to the positive ideal and distance from the negative:
    C'' = b1 * G+ + b2 * (1 - G-)."""
    if abs(beta1 + beta2 - 1.0) > 1e-9 or beta1 < 0 or beta2 < 0:
        raise ValidationError(f"weights must be convex: beta1={beta1}, beta2={beta2}")
    gplus = np.asarray(gplus, dtype=np.float64)
    gminus = np.asarray(gminus, dtype=np.float64)
    scores = beta1 * gplus + beta2 * (1.0 - gminus)
    return MethodScores.from_scores("max-entropy", scores)


def score_all_methods(
    y: np.ndarray, ideals: IdealVectors, params: MethodParams | None = None
) -> tuple[list[MethodScores], dict]:
    """Run all four scoring methods on the weighted matrix.

    Returns the four MethodScores, in fixed order (topsis, grey-approach,
    membership, max-entropy), plus the shared intermediates: the incidence
    degrees against both ideals and the entropy-derived pair weights.
    """
    params = params or MethodParams()
    y = _check_matrix(y)
    topsis = topsis_scores(y, ideals)
    rplus = incidence_coefficients(y, ideals.positive, params.rho)
    rminus = incidence_coefficients(y, ideals.negative, params.rho)
    gplus = incidence_degrees(rplus)
    gminus = incidence_degrees(rminus)
    approach = approach_with_preference(gplus, gminus, params)
    membership = membership_degrees(gplus, gminus)
    b1, b2 = max_entropy_weights(gplus, gminus)
    comprehensive = comprehensive_incidence(gplus, gminus, b1, b2)
    extras = {"gplus": gplus, "gminus": gminus, "beta1": b1, "beta2": b2}
    return [topsis, approach, membership, comprehensive], extras
