"""Monte Carlo oracle: uniform sampling, empirical distances and KS checks.

Random numbers come from numpy's ``PCG64`` bit generator. A seed is turned
into independent child streams with ``SeedSequence.spawn``, one for each
polygon, so results depend on the seed only.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .exceptions import ResourceError
from .geometry import Polygon, Triangle, TriangleDecomposition

PRNG_ALGORITHM = f"numpy PCG64 via SeedSequence (numpy {np.__version__})"
MAX_SAMPLES = 20000
_CHUNK = 1 << 22


@dataclass(frozen=True)
class SampleSet:
    distances: np.ndarray
    n_pairs: int

    def __post_init__(self):
        d = self.distances
        if len(d) != self.n_pairs:
            raise ValueError("n_pairs must equal the number of distances")
        if len(d) and (d[0] < 0 or np.any(np.diff(d) < 0)):
            raise ValueError("distances must be nonnegative and sorted ascending")

    def __len__(self):
        return self.n_pairs


def make_rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed)))


def spawn_rngs(seed: int, n: int) -> list[np.random.Generator]:
    return [np.random.Generator(np.random.PCG64(s))
            for s in np.random.SeedSequence(seed).spawn(n)]


def _tri_array(t) -> np.ndarray:
    return t.coords if isinstance(t, Triangle) else np.asarray(t, dtype=float).reshape(3, 2)


def triangle_point(t, u, v) -> np.ndarray:
    """Map ``u <= v`` in [0, 1] to ``u a + (v - u) b + (1 - v) c``."""
    a, b, c = _tri_array(t)
    u = np.asarray(u, dtype=float)[..., None]
    v = np.asarray(v, dtype=float)[..., None]
    return u * a + (v - u) * b + (1.0 - v) * c


def sample_triangle(t, rng: np.random.Generator, size: Optional[int] = None) -> np.ndarray:
    """Uniform point(s) in a triangle; shape ``(2,)`` or ``(size, 2)``."""
    n = 1 if size is None else size
    uv = np.sort(rng.random((n, 2)), axis=1)
    pts = triangle_point(t, uv[:, 0], uv[:, 1])
    return pts[0] if size is None else pts


def sample_polygon(p: Polygon, d: Optional[TriangleDecomposition], rng: np.random.Generator,
                   size: Optional[int] = None) -> np.ndarray:
    """Uniform point(s) in a polygon through its triangle decomposition.

    One uniform variate picks the triangle by inverting the cumulative area
    fractions; a second pair places the point inside that triangle.
    """
    d = d if d is not None else p.triangles
    tris = np.array([t.coords for t in d.triangles])
    cum = np.cumsum(d.areas / p.area)
    n = 1 if size is None else size
    pick = np.searchsorted(cum, rng.random(n), side="right")
    pick = np.minimum(pick, len(tris) - 1)
    uv = np.sort(rng.random((n, 2)), axis=1)
    u, v = uv[:, :1], uv[:, 1:]
    chosen = tris[pick]
    pts = u * chosen[:, 0] + (v - u) * chosen[:, 1] + (1.0 - v) * chosen[:, 2]
    return pts[0] if size is None else pts


def pairwise_distances(xa: np.ndarray, xb: np.ndarray) -> np.ndarray:
    """All ``len(xa) * len(xb)`` cross distances, row-major in ``xa``."""
    out = np.empty(len(xa) * len(xb))
    rows = max(1, _CHUNK // max(len(xb), 1))
    for start in range(0, len(xa), rows):
        block = xa[start:start + rows]
        d = np.hypot(block[:, None, 0] - xb[None, :, 0], block[:, None, 1] - xb[None, :, 1])
        out[start * len(xb):(start + len(block)) * len(xb)] = d.ravel()
    return out


def empirical_distances(a: Polygon, b: Polygon, n: int, seed: int,
                        max_samples: int = MAX_SAMPLES) -> SampleSet:
    """Sample n points in each polygon and return all n**2 sorted distances."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if n > max_samples:
        raise ResourceError(f"n = {n} exceeds the sample budget of {max_samples} "
                            f"({n * n} pair distances)")
    a, b = Polygon(a), Polygon(b)
    rng_a, rng_b = spawn_rngs(seed, 2)
    xa = sample_polygon(a, None, rng_a, n)
    xb = sample_polygon(b, None, rng_b, n)
    d = pairwise_distances(xa, xb)
    d.sort(kind="stable")
    return SampleSet(d, n * n)


def ecdf(s: SampleSet, r):
    """Fraction of distances ``<= r``."""
    k = np.searchsorted(s.distances, r, side="right")
    return k / s.n_pairs


def histogram_pdf(s: SampleSet, bins: int) -> list[tuple[float, float]]:
    """Density histogram with equal-width bins over ``[min, max]``."""
    if bins < 2:
        raise ValueError(f"bins must be >= 2, got {bins}")
    lo, hi = float(s.distances[0]), float(s.distances[-1])
    if hi == lo:
        # a single occupied bin of unit mass; width chosen as 1 length unit
        hi = lo + 1.0
    counts, edges = np.histogram(s.distances, bins=bins, range=(lo, hi))
    width = (hi - lo) / bins
    density = counts / (s.n_pairs * width)
    centers = 0.5 * (edges[1:] + edges[:-1])
    return list(zip(centers.tolist(), density.tolist()))


@dataclass(frozen=True)
class KSResult:
    statistic: float
    clamped: bool

    def __float__(self):
        return self.statistic


def ks_test(s: SampleSet, cdf: Sequence[tuple[float, float]]) -> KSResult:
    """Two-sided KS distance between the sample ECDF and a gridded CDF.

    The CDF is interpolated linearly between grid points and clamped to 0
    below and 1 above the grid; ``clamped`` reports whether any sample fell
    outside the grid.
    """
    grid = np.asarray(cdf, dtype=float).reshape(-1, 2)
    r, F = grid[:, 0], grid[:, 1]
    x = s.distances
    Fx = np.interp(x, r, F, left=0.0, right=1.0)
    n = s.n_pairs
    # ECDF just after x_i (ties take the right end) and just before it
    upper = np.searchsorted(x, x, side="right") / n
    lower = np.searchsorted(x, x, side="left") / n
    d = max(float(np.max(upper - Fx)), float(np.max(Fx - lower)))
    clamped = bool(x[0] < r[0] or x[-1] > r[-1])
    return KSResult(min(max(d, 0.0), 1.0), clamped)


def ks_statistic(s: SampleSet, cdf: Sequence[tuple[float, float]]) -> float:
    return ks_test(s, cdf).statistic
