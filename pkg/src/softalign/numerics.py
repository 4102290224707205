"""Dense vector/matrix primitives and stable elementary functions.

Everything is computed in float64. Vectors and matrices are plain numpy
arrays; callers that need validated containers wrap these functions.
"""

import numpy as np

from .errors import ShapeMismatchError, ZeroNormError

ZERO_NORM_FLOOR = 1e-30


def as_f64(x) -> np.ndarray:
    """Return ``x`` as a float64 ndarray without copying when possible."""
    return np.asarray(x, dtype=np.float64)


def l2_normalize(v) -> np.ndarray:
    """Scale ``v`` to unit Euclidean norm.

    Raises ZeroNormError when the norm falls below 1e-30.
    """
    v = as_f64(v)
    norm = float(np.linalg.norm(v))
    if norm < ZERO_NORM_FLOOR:
        raise ZeroNormError(f"cannot normalize vector with norm {norm!r}")
    return v / norm


def normalize_rows(m) -> np.ndarray:
    """L2-normalize each row of a 2-D array.

    Raises ZeroNormError naming the first offending row.
    """
    m = as_f64(m)
    norms = np.linalg.norm(m, axis=1)
    bad = np.flatnonzero(norms < ZERO_NORM_FLOOR)
    if bad.size:
        raise ZeroNormError(f"row {int(bad[0])} has zero norm")
    return m / norms[:, None]


def cosine(u, v) -> float:
    """Cosine similarity, clamped to [-1, 1] to absorb rounding."""
    u = l2_normalize(u)
    v = l2_normalize(v)
    return float(np.clip(np.dot(u, v), -1.0, 1.0))


def frobenius_dist_sq(a, b) -> float:
    """Squared Frobenius distance, sum of squared entrywise differences."""
    a = as_f64(a)
    b = as_f64(b)
    if a.shape != b.shape:
        raise ShapeMismatchError(f"shapes {a.shape} and {b.shape} differ")
    d = a - b
    return float(np.sum(d * d))


def logistic(x):
    """Overflow-safe logistic sigmoid 1 / (1 + exp(-x)).

    Branches on sign so the exponential argument is never positive.
    """
    x = as_f64(x)
    out = np.empty_like(x)
    pos = x >= 0
    out[pos] = 1.0 / (1.0 + np.exp(-x[pos]))
    ex = np.exp(x[~pos])
    out[~pos] = ex / (1.0 + ex)
    if out.ndim == 0:
        return float(out)
    return out


def softplus(x):
    """Overflow-safe log(1 + exp(x)), as max(x, 0) + log1p(exp(-|x|)).

    Used for the cross-entropy identities -log(sigmoid(s)) = softplus(-s)
    and -log(1 - sigmoid(s)) = softplus(s).
    """
    x = as_f64(x)
    out = np.maximum(x, 0.0) + np.log1p(np.exp(-np.abs(x)))
    if out.ndim == 0:
        return float(out)
    return out
