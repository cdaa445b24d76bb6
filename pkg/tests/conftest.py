import math

import numpy as np
import pytest

from polydist import GeometryError, Polygon

FIG1_A = [(0, 2), (1, 1), (1, 2)]
FIG1_B = [(0, 0), (1, 0), (0, 1)]
POLY1 = [(0, 0), (3, 0), (2, 3), (2, 1)]
POLY2 = [(3, 4), (7, 4), (5, 7), (3, 6), (1, 6)]
UNIT_SQUARE = [(0, 0), (1, 0), (1, 1), (0, 1)]
L_HEXAGON = [(0, 0), (2, 0), (2, 1), (1, 1), (1, 2), (0, 2)]


@pytest.fixture
def fig1():
    return Polygon(FIG1_A), Polygon(FIG1_B)


@pytest.fixture
def fig3():
    return Polygon(POLY1), Polygon(POLY2)


@pytest.fixture
def square():
    return Polygon(UNIT_SQUARE)


def regular_polygon(n, radius=1.0, phase=0.0):
    ang = phase + 2 * np.pi * np.arange(n) / n
    return Polygon(np.c_[radius * np.cos(ang), radius * np.sin(ang)])


def random_polygon(rng, k, center=(0.0, 0.0), concave=True):
    """Star-shaped polygon with k vertices; convex (on a circle) if not concave."""
    while True:
        if concave:
            gaps = rng.uniform(0.2, 1.0, k)
            ang = rng.uniform(0, 2 * np.pi) + 2 * np.pi * np.cumsum(gaps) / gaps.sum()
            rad = rng.uniform(0.3, 1.2, k)
        else:
            ang = np.sort(rng.uniform(0, 2 * np.pi, k))
            rad = np.ones(k)
        pts = np.c_[center[0] + rad * np.cos(ang), center[1] + rad * np.sin(ang)]
        try:
            p = Polygon(pts)
        except GeometryError:
            continue
        if p.area > 0.05:
            return p


def random_pairs(seed, count):
    rng = np.random.default_rng(seed)
    pairs = []
    for i in range(count):
        ka, kb = rng.integers(3, 9, size=2)
        a = random_polygon(rng, ka, concave=bool(i % 2))
        center = rng.uniform(-2.5, 2.5, 2)
        b = random_polygon(rng, kb, center=center, concave=bool((i // 2) % 2))
        pairs.append((a, b))
    return pairs


def _row_intervals(tri, ys):
    lo = np.full(ys.shape, -np.inf)
    hi = np.full(ys.shape, np.inf)
    for k in range(3):
        (ax, ay), (bx, by) = tri[k], tri[(k + 1) % 3]
        ex, ey = bx - ax, by - ay
        c = ex * (ys - ay)
        if ey == 0:
            lo = np.where(c < 0, np.inf, lo)
        elif ey > 0:
            hi = np.minimum(hi, ax + c / ey)
        else:
            lo = np.maximum(lo, ax + c / ey)
    return lo, hi


def raster_overlap(tri1, tri2, rows=2000):
    """Brute-force overlap of two CCW triangles by scanline rasterization.

    Each of ``rows`` scanlines through the common y-range is cut exactly by
    both triangles' half-planes; the overlap is the midpoint-rule sum of
    the covered widths.
    """
    t1 = np.asarray(tri1, dtype=float)
    t2 = np.asarray(tri2, dtype=float)
    ylo = max(t1[:, 1].min(), t2[:, 1].min())
    yhi = min(t1[:, 1].max(), t2[:, 1].max())
    if yhi <= ylo:
        return 0.0
    h = (yhi - ylo) / rows
    ys = ylo + (np.arange(rows) + 0.5) * h
    l1, h1 = _row_intervals(t1, ys)
    l2, h2 = _row_intervals(t2, ys)
    return float(np.clip(np.minimum(h1, h2) - np.maximum(l1, l2), 0, None).sum() * h)


def pixel_overlap(poly_a, poly_b, res=2000):
    """Pixel-count overlap of two polygons on a res x res grid over their common box.

    Sample points sit at an irrational offset inside each pixel so that
    they never line up with axis-aligned or diagonal edges.
    """
    from matplotlib.path import Path

    a = np.asarray(poly_a, dtype=float)
    b = np.asarray(poly_b, dtype=float)
    lo = np.maximum(a.min(0), b.min(0))
    hi = np.minimum(a.max(0), b.max(0))
    if np.any(hi <= lo):
        return 0.0
    h = (hi - lo) / res
    xs = lo[0] + (np.arange(res) + 1 / math.sqrt(2)) * h[0]
    ys = lo[1] + (np.arange(res) + 1 / math.pi) * h[1]
    X, Y = np.meshgrid(xs, ys)
    pts = np.c_[X.ravel(), Y.ravel()]
    inside = Path(a).contains_points(pts) & Path(b).contains_points(pts)
    return float(inside.sum() * h[0] * h[1])


def trapezoid(y, x):
    y = np.asarray(y, dtype=float)
    x = np.asarray(x, dtype=float)
    return float(np.sum(0.5 * (y[1:] + y[:-1]) * np.diff(x)))


SQRT2 = math.sqrt(2)
SQRT5 = math.sqrt(5)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
