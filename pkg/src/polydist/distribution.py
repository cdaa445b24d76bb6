"""Distance distributions between uniform points in two polygons.

The density at distance ``r`` is obtained from the angular integral of the
overlap area between ``a`` and ``b`` shifted by ``(r cos t, r sin t)``::

    f(r) = r / (area(a) area(b)) * integral_0^{2 pi} area(a ∩ (b + r e_t)) dt

and the CDF by cumulative trapezoid integration of the sampled density.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

import numpy as np

from .geometry import Polygon, distance_bounds, overlap_areas


class Scheme(str, Enum):
    MIDPOINT = "midpoint"
    TRAPEZOID = "trapezoid"


@dataclass(frozen=True)
class QuadratureConfig:
    """Grid sizes for the angular quadrature and the radial sampling."""

    theta_divisions: int = 360
    r_points: int = 200
    scheme: Scheme = Scheme.TRAPEZOID

    def __post_init__(self):
        object.__setattr__(self, "scheme", Scheme(self.scheme))
        if int(self.theta_divisions) != self.theta_divisions or self.theta_divisions < 8:
            raise ValueError(f"theta_divisions must be an integer >= 8, got {self.theta_divisions}")
        if int(self.r_points) != self.r_points or self.r_points < 2:
            raise ValueError(f"r_points must be an integer >= 2, got {self.r_points}")
        object.__setattr__(self, "theta_divisions", int(self.theta_divisions))
        object.__setattr__(self, "r_points", int(self.r_points))

    @property
    def normalization_tolerance(self) -> float:
        return max(1e-2, 10.0 / self.theta_divisions)

    def theta_nodes(self) -> tuple[np.ndarray, float]:
        """Quadrature nodes on [0, 2 pi) and the common weight."""
        n = self.theta_divisions
        h = 2.0 * math.pi / n
        offset = 0.5 if self.scheme is Scheme.MIDPOINT else 0.0
        # periodic integrand: the trapezoid end nodes coincide and merge into one
        return (np.arange(n) + offset) * h, h


@dataclass(frozen=True)
class DistanceDistribution:
    r_grid: np.ndarray
    pdf_values: np.ndarray
    support: tuple[float, float]
    area_a: float
    area_b: float
    config: QuadratureConfig = field(default_factory=QuadratureConfig)

    def __post_init__(self):
        if self.r_grid.shape != self.pdf_values.shape:
            raise ValueError("r_grid and pdf_values must have the same length")
        if np.any(np.diff(self.r_grid) <= 0):
            raise ValueError("r_grid must be strictly ascending")
        if np.any(self.pdf_values < 0):
            raise ValueError("pdf values must be nonnegative")

    def integral(self) -> float:
        return float(np.trapezoid(self.pdf_values, self.r_grid))

    def is_normalized(self) -> bool:
        return abs(self.integral() - 1.0) <= self.config.normalization_tolerance

    def __call__(self, r):
        """Linear interpolation of the sampled density, zero off the grid."""
        return np.interp(r, self.r_grid, self.pdf_values, left=0.0, right=0.0)


def _check_r(r: float) -> float:
    r = float(r)
    if not math.isfinite(r):
        raise ValueError(f"r must be finite, got {r}")
    if r < 0:
        raise ValueError(f"r must be nonnegative, got {r}")
    return r


def overlap(a: Polygon, b: Polygon, r: float, theta: float) -> float:
    """Area of ``a ∩ (b shifted by (r cos theta, r sin theta))``."""
    shift = np.array([[r * math.cos(theta), r * math.sin(theta)]])
    return float(overlap_areas(a, b, shift)[0])


def angular_integral(a: Polygon, b: Polygon, r: float, config: QuadratureConfig) -> float:
    """Quadrature of the overlap area over a full turn of the shift direction."""
    theta, h = config.theta_nodes()
    shifts = np.column_stack([r * np.cos(theta), r * np.sin(theta)])
    areas = overlap_areas(a, b, shifts)
    return h * math.fsum(areas)


def pdf_at(a: Polygon, b: Polygon, r: float, config: Optional[QuadratureConfig] = None) -> float:
    config = config or QuadratureConfig()
    r = _check_r(r)
    a, b = Polygon(a), Polygon(b)
    if r == 0.0:
        return 0.0
    return r / (a.area * b.area) * angular_integral(a, b, r, config)


def _pdf_values(a, b, r_grid, config, workers):
    def one(r):
        return pdf_at(a, b, r, config)

    if workers and workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            values = list(pool.map(one, r_grid))
    else:
        values = [one(r) for r in r_grid]
    return np.maximum(np.array(values, dtype=float), 0.0)


def r_grid_for(a: Polygon, b: Polygon, config: QuadratureConfig) -> tuple[np.ndarray, tuple[float, float]]:
    lo, hi = distance_bounds(a, b)
    return np.linspace(lo, hi, config.r_points), (lo, hi)


def pdf_curve(a: Polygon, b: Polygon, config: Optional[QuadratureConfig] = None,
              workers: int = 1) -> DistanceDistribution:
    """Sample the density on a uniform grid spanning the distance support.

    ``workers > 1`` evaluates grid points on a thread pool; every grid point
    is computed independently so the result does not depend on it.
    """
    config = config or QuadratureConfig()
    a, b = Polygon(a), Polygon(b)
    r_grid, support = r_grid_for(a, b, config)
    values = _pdf_values(a, b, r_grid, config, workers)
    return DistanceDistribution(r_grid, values, support, a.area, b.area, config)


def cdf_curve(dist: DistanceDistribution) -> list[tuple[float, float]]:
    """Cumulative trapezoid of the density, clamped to [0, 1]."""
    r, f = dist.r_grid, dist.pdf_values
    steps = 0.5 * (f[1:] + f[:-1]) * np.diff(r)
    cum = np.concatenate([[0.0], np.cumsum(steps)])
    cum = np.clip(np.maximum.accumulate(cum), 0.0, 1.0)
    return list(zip(r.tolist(), cum.tolist()))


def pdf_via_triangle_sum(p: Polygon, q: Polygon, config: Optional[QuadratureConfig] = None,
                         workers: int = 1) -> DistanceDistribution:
    """Density as the area-weighted mixture of triangle-pair densities.

    Each triangle pair (Ti, Tj) contributes its own distance density with
    weight ``area(Ti) area(Tj) / (area(p) area(q))``. Pair densities are
    evaluated on the grid of the whole pair ``(p, q)`` so the mixture can be
    compared pointwise with :func:`pdf_curve`.
    """
    config = config or QuadratureConfig()
    p, q = Polygon(p), Polygon(q)
    r_grid, support = r_grid_for(p, q, config)
    total = np.zeros_like(r_grid)
    for ti in p.triangles.triangles:
        tp = Polygon(ti.coords)
        for tj in q.triangles.triangles:
            tq = Polygon(tj.coords)
            weight = tp.area * tq.area / (p.area * q.area)
            total += weight * _pdf_values(tp, tq, r_grid, config, workers)
    return DistanceDistribution(r_grid, total, support, p.area, q.area, config)
