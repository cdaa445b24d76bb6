"""Input checks shared by the estimators and the CLI."""

import numpy as np

from .geometry import Polygon


def check_polygon(X, name="polygon"):
    """Return ``X`` as a :class:`Polygon`, accepting an ``(n, 2)`` array-like."""
    if isinstance(X, Polygon):
        return X
    arr = np.asarray(X, dtype=float)
    if arr.ndim != 2 or arr.shape[1] != 2:
        raise ValueError(f"{name} must have shape (n_vertices, 2), got {arr.shape}")
    return Polygon(arr)


def check_radii(r):
    """Distances as a 1-D float array; accepts scalars and ``(n, 1)`` columns."""
    arr = np.asarray(r, dtype=float)
    if arr.ndim == 2 and arr.shape[1] == 1:
        arr = arr[:, 0]
    arr = np.atleast_1d(arr)
    if arr.ndim != 1:
        raise ValueError(f"distances must be 1-D or a single column, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError("distances must be finite")
    if np.any(arr < 0):
        raise ValueError("distances must be nonnegative")
    return arr


def check_positive_int(value, name, minimum=1):
    if isinstance(value, bool) or int(value) != value or value < minimum:
        raise ValueError(f"{name} must be an integer >= {minimum}, got {value!r}")
    return int(value)
