"""Planar primitives: points, simple polygons, triangulation and overlap area.

Polygons are immutable and always stored counter-clockwise. Overlap area
between two polygons is computed by clipping every triangle of one
triangulation against every triangle of the other and summing the pieces.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Optional, Sequence

import numpy as np

from . import _kernels
from .exceptions import GeometryError

EPS = _kernels.EPS


@dataclass(frozen=True, slots=True)
class Point:
    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise GeometryError(f"non-finite coordinate in point ({self.x}, {self.y})",
                                rule="finite-coordinates")

    def __iter__(self) -> Iterator[float]:
        yield self.x
        yield self.y


def _as_xy(p) -> tuple[float, float]:
    if isinstance(p, Point):
        return p.x, p.y
    x, y = p
    return float(x), float(y)


def _shoelace(coords: np.ndarray) -> float:
    # relative to the first vertex to limit cancellation far from the origin
    rel = coords - coords[0]
    x = rel[:, 0]
    y = rel[:, 1]
    xn = np.roll(x, -1)
    yn = np.roll(y, -1)
    return 0.5 * float(np.sum(x * yn - xn * y))


def _orient(ax, ay, bx, by, cx, cy) -> float:
    return (bx - ax) * (cy - ay) - (by - ay) * (cx - ax)


def _on_segment(px, py, ax, ay, bx, by) -> bool:
    return (min(ax, bx) - EPS <= px <= max(ax, bx) + EPS
            and min(ay, by) - EPS <= py <= max(ay, by) + EPS)


def segments_intersect(p1, p2, p3, p4) -> bool:
    """True if closed segments p1p2 and p3p4 share at least one point."""
    (ax, ay), (bx, by), (cx, cy), (dx, dy) = map(_as_xy, (p1, p2, p3, p4))
    scale = max(abs(bx - ax) + abs(by - ay), abs(dx - cx) + abs(dy - cy), 1.0)
    tol = EPS * scale * scale
    d1 = _orient(cx, cy, dx, dy, ax, ay)
    d2 = _orient(cx, cy, dx, dy, bx, by)
    d3 = _orient(ax, ay, bx, by, cx, cy)
    d4 = _orient(ax, ay, bx, by, dx, dy)
    if ((d1 > tol and d2 < -tol) or (d1 < -tol and d2 > tol)) and \
            ((d3 > tol and d4 < -tol) or (d3 < -tol and d4 > tol)):
        return True
    if abs(d1) <= tol and _on_segment(ax, ay, cx, cy, dx, dy):
        return True
    if abs(d2) <= tol and _on_segment(bx, by, cx, cy, dx, dy):
        return True
    if abs(d3) <= tol and _on_segment(cx, cy, ax, ay, bx, by):
        return True
    if abs(d4) <= tol and _on_segment(dx, dy, ax, ay, bx, by):
        return True
    return False


def _point_segment_distance(px, py, ax, ay, bx, by) -> float:
    ex, ey = bx - ax, by - ay
    ll = ex * ex + ey * ey
    t = 0.0 if ll == 0.0 else max(0.0, min(1.0, ((px - ax) * ex + (py - ay) * ey) / ll))
    return math.hypot(px - (ax + t * ex), py - (ay + t * ey))


def segment_distance(p1, p2, p3, p4) -> float:
    """Euclidean distance between closed segments p1p2 and p3p4."""
    if segments_intersect(p1, p2, p3, p4):
        return 0.0
    (ax, ay), (bx, by), (cx, cy), (dx, dy) = map(_as_xy, (p1, p2, p3, p4))
    return min(_point_segment_distance(ax, ay, cx, cy, dx, dy),
               _point_segment_distance(bx, by, cx, cy, dx, dy),
               _point_segment_distance(cx, cy, ax, ay, bx, by),
               _point_segment_distance(dx, dy, ax, ay, bx, by))


class Polygon:
    """A simple polygon without holes, stored counter-clockwise.

    Parameters
    ----------
    vertices : sequence of (x, y) pairs or Point
        At least three vertices in either orientation. The closing vertex
        must not be repeated.

    Raises
    ------
    GeometryError
        If the vertex loop has fewer than three vertices, repeated
        consecutive vertices, non-finite coordinates, zero area, or
        self-intersections. ``err.rule`` names the violated rule.
    """

    def __init__(self, vertices: Iterable):
        if isinstance(vertices, Polygon):
            self._coords = vertices._coords
            return
        try:
            coords = np.array([_as_xy(v) for v in vertices], dtype=float)
        except (TypeError, ValueError) as exc:
            raise GeometryError(f"vertices must be (x, y) pairs: {exc}", rule="vertex-format") from exc
        if coords.ndim != 2 or coords.shape[0] < 3:
            raise GeometryError(f"polygon needs at least 3 vertices, got {len(coords)}",
                                rule="min-vertices")
        if not np.all(np.isfinite(coords)):
            raise GeometryError("polygon has a non-finite coordinate", rule="finite-coordinates")
        nxt = np.roll(coords, -1, axis=0)
        if np.any(np.all(np.abs(coords - nxt) <= EPS, axis=1)):
            raise GeometryError("polygon has repeated consecutive vertices",
                                rule="repeated-vertex")
        scale = float(np.ptp(coords, axis=0).max())
        rel = coords - coords[0]
        spread = rel[:, 0] * rel[1, 1] - rel[:, 1] * rel[1, 0]
        if np.all(np.abs(spread) <= EPS * scale * scale):
            raise GeometryError("polygon is degenerate (all vertices collinear)",
                                rule="positive-area")
        _check_simple(coords)
        area = _shoelace(coords)
        if abs(area) <= EPS * scale * scale:
            raise GeometryError("polygon has zero area", rule="positive-area")
        if area < 0:
            coords = coords[::-1].copy()
        coords.setflags(write=False)
        self._coords = coords

    @property
    def coords(self) -> np.ndarray:
        """Read-only ``(n, 2)`` array of CCW vertices."""
        return self._coords

    @property
    def vertices(self) -> tuple[Point, ...]:
        return tuple(Point(float(x), float(y)) for x, y in self._coords)

    @cached_property
    def area(self) -> float:
        return _shoelace(self._coords)

    @cached_property
    def triangles(self) -> "TriangleDecomposition":
        return triangulate(self)

    @cached_property
    def _tri_coords(self) -> np.ndarray:
        arr = np.array([t.coords for t in self.triangles.triangles], dtype=float).reshape(-1, 3, 2)
        arr.setflags(write=False)
        return arr

    def edges(self) -> Iterator[tuple[np.ndarray, np.ndarray]]:
        c = self._coords
        for i in range(len(c)):
            yield c[i], c[(i + 1) % len(c)]

    def contains(self, point) -> bool:
        """Even-odd test; boundary points count as inside."""
        px, py = _as_xy(point)
        inside = False
        for (ax, ay), (bx, by) in self.edges():
            if _point_segment_distance(px, py, ax, ay, bx, by) <= EPS:
                return True
            if (ay > py) != (by > py):
                xcross = ax + (py - ay) * (bx - ax) / (by - ay)
                if px < xcross:
                    inside = not inside
        return inside

    def __len__(self) -> int:
        return len(self._coords)

    def __eq__(self, other) -> bool:
        return isinstance(other, Polygon) and np.array_equal(self._coords, other._coords)

    def __hash__(self) -> int:
        return hash(self._coords.tobytes())

    def __repr__(self) -> str:
        pts = ", ".join(f"({x:g}, {y:g})" for x, y in self._coords)
        return f"Polygon([{pts}])"


def _check_simple(coords: np.ndarray) -> None:
    n = len(coords)
    for i in range(n):
        a, b = coords[i], coords[(i + 1) % n]
        for j in range(i + 1, n):
            c, d = coords[j], coords[(j + 1) % n]
            if j == i + 1 or (i == 0 and j == n - 1):
                # adjacent edges share one vertex; reject only a fold-back
                shared = b if j == i + 1 else a
                other_1 = a if j == i + 1 else b
                other_2 = d if j == i + 1 else c
                u = other_1 - shared
                v = other_2 - shared
                cross = u[0] * v[1] - u[1] * v[0]
                dot = u[0] * v[0] + u[1] * v[1]
                if abs(cross) <= EPS * (np.hypot(*u) * np.hypot(*v)) and dot > 0:
                    raise GeometryError(f"edges {i} and {j} overlap", rule="self-intersection")
                continue
            if segments_intersect(a, b, c, d):
                raise GeometryError(f"edges {i} and {j} intersect", rule="self-intersection")


@dataclass(frozen=True)
class Triangle:
    a: Point
    b: Point
    c: Point

    def __post_init__(self):
        for name in ("a", "b", "c"):
            v = getattr(self, name)
            if not isinstance(v, Point):
                object.__setattr__(self, name, Point(*_as_xy(v)))
        if self.area <= 0.0:
            raise GeometryError("triangle must be counter-clockwise with positive area",
                                rule="positive-area")

    @property
    def area(self) -> float:
        return 0.5 * _orient(self.a.x, self.a.y, self.b.x, self.b.y, self.c.x, self.c.y)

    @property
    def coords(self) -> np.ndarray:
        return np.array([[self.a.x, self.a.y], [self.b.x, self.b.y], [self.c.x, self.c.y]])


@dataclass(frozen=True)
class TriangleDecomposition:
    triangles: tuple[Triangle, ...]
    source_area: float

    def __post_init__(self):
        total = math.fsum(t.area for t in self.triangles)
        if abs(total - self.source_area) > 1e-9 * abs(self.source_area):
            raise GeometryError(f"triangle areas sum to {total}, expected {self.source_area}",
                                rule="area-sum")

    def __len__(self) -> int:
        return len(self.triangles)

    @property
    def areas(self) -> np.ndarray:
        return np.array([t.area for t in self.triangles])


def signed_area(polygon) -> float:
    """Shoelace area of the vertex loop in the order given.

    For a :class:`Polygon` this is always positive because vertices are
    stored counter-clockwise; a raw vertex sequence keeps its sign.
    """
    if isinstance(polygon, Polygon):
        return polygon.area
    return _shoelace(np.asarray([_as_xy(v) for v in polygon], dtype=float))


def translate(polygon: Polygon, dx: float, dy: float) -> Polygon:
    out = Polygon.__new__(Polygon)
    coords = polygon.coords + np.array([dx, dy], dtype=float)
    coords.setflags(write=False)
    out._coords = coords
    return out


def _point_in_triangle(p, a, b, c, tol) -> bool:
    return (_orient(a[0], a[1], b[0], b[1], p[0], p[1]) >= -tol
            and _orient(b[0], b[1], c[0], c[1], p[0], p[1]) >= -tol
            and _orient(c[0], c[1], a[0], a[1], p[0], p[1]) >= -tol)


def triangulate(polygon) -> TriangleDecomposition:
    """Ear-clipping triangulation of a simple polygon.

    Vertices with a straight (180 degree) interior angle are dropped first,
    so the result has ``n - 2`` triangles where ``n`` counts the remaining
    corners.
    """
    polygon = Polygon(polygon)
    pts = polygon.coords
    scale = float(np.ptp(pts, axis=0).max())
    tol = EPS * scale * scale

    idx = list(range(len(pts)))
    changed = True
    while changed and len(idx) > 3:
        changed = False
        for k in range(len(idx)):
            a, b, c = pts[idx[k - 1]], pts[idx[k]], pts[idx[(k + 1) % len(idx)]]
            if abs(_orient(*a, *b, *c)) <= tol:
                del idx[k]
                changed = True
                break

    triangles = []
    guard = 0
    start = 0
    while len(idx) > 3:
        n = len(idx)
        best = None
        # resume past the last ear so convex runs split as a zigzag, not a fan
        for step in range(n):
            k = (start + step) % n
            ia, ib, ic = idx[k - 1], idx[k], idx[(k + 1) % n]
            a, b, c = pts[ia], pts[ib], pts[ic]
            turn = _orient(*a, *b, *c)
            if turn <= tol:
                continue
            blocked = False
            for m in idx:
                if m in (ia, ib, ic):
                    continue
                if _point_in_triangle(pts[m], a, b, c, tol):
                    blocked = True
                    break
            if blocked:
                continue
            best = k
            break
        if best is None:
            raise GeometryError("no ear found; polygon is degenerate", rule="degenerate")
        ia, ib, ic = idx[best - 1], idx[best], idx[(best + 1) % n]
        triangles.append(Triangle(Point(*pts[ia]), Point(*pts[ib]), Point(*pts[ic])))
        del idx[best]
        start = best + 1 if best < len(idx) else 0
        guard += 1
        if guard > len(pts):
            raise GeometryError("triangulation did not terminate", rule="degenerate")
    a, b, c = (pts[i] for i in idx)
    if _orient(*a, *b, *c) <= tol:
        raise GeometryError("last triangle is degenerate", rule="degenerate")
    triangles.append(Triangle(Point(*a), Point(*b), Point(*c)))
    return TriangleDecomposition(tuple(triangles), polygon.area)


def line_intersection(p1, p2, p3, p4) -> Optional[Point]:
    """Intersection of the infinite lines p1p2 and p3p4, or None if parallel."""
    (x1, y1), (x2, y2), (x3, y3), (x4, y4) = map(_as_xy, (p1, p2, p3, p4))
    den = (x1 - x2) * (y3 - y4) - (y1 - y2) * (x3 - x4)
    if abs(den) <= EPS * math.hypot(x1 - x2, y1 - y2) * math.hypot(x3 - x4, y3 - y4):
        return None
    d12 = x1 * y2 - x2 * y1
    d34 = x3 * y4 - x4 * y3
    return Point((d12 * (x3 - x4) - (x1 - x2) * d34) / den,
                 (d12 * (y3 - y4) - (y1 - y2) * d34) / den)


def circle_line_intersection(radius: float, p1, p2) -> tuple[Point, ...]:
    """Points where the line p1p2 meets the circle of ``radius`` about the origin.

    Returns zero, one (tangent) or two points.
    """
    if not radius > 0:
        raise ValueError("radius must be positive")
    (x1, y1), (x2, y2) = _as_xy(p1), _as_xy(p2)
    dx, dy = x2 - x1, y2 - y1
    dr2 = dx * dx + dy * dy
    if dr2 == 0.0:
        raise ValueError("p1 and p2 must differ")
    det = x1 * y2 - x2 * y1
    disc = radius * radius * dr2 - det * det
    tol = EPS * radius * radius * dr2
    if disc < -tol:
        return ()
    if disc <= tol:
        return (Point(det * dy / dr2 + 0.0, -det * dx / dr2 + 0.0),)
    root = math.sqrt(disc)
    sgn = -1.0 if dy < 0 else 1.0
    return tuple(Point((det * dy + s * sgn * dx * root) / dr2,
                       (-det * dx + s * abs(dy) * root) / dr2) for s in (-1.0, 1.0))


def convex_clip(subject: Triangle, clip: Triangle) -> Optional[Polygon]:
    """Convex intersection of two triangles, or None when it has no area."""
    raw = _kernels.clip_convex(subject.coords, clip.coords)
    if len(raw) < 3:
        return None
    keep = [raw[0]]
    for v in raw[1:]:
        if np.max(np.abs(v - keep[-1])) > EPS:
            keep.append(v)
    if len(keep) > 1 and np.max(np.abs(keep[0] - keep[-1])) <= EPS:
        keep.pop()
    if len(keep) < 3:
        return None
    try:
        return Polygon(keep)
    except GeometryError:
        return None


def overlap_areas(a: Polygon, b: Polygon, shifts: np.ndarray) -> np.ndarray:
    """``area(a ∩ (b + s))`` for each row ``s`` of an ``(k, 2)`` shift array."""
    shifts = np.ascontiguousarray(shifts, dtype=float).reshape(-1, 2)
    return _kernels.overlap_areas(a._tri_coords, b._tri_coords, shifts)


def intersection_area(a: Polygon, b: Polygon) -> float:
    a, b = Polygon(a), Polygon(b)
    return float(overlap_areas(a, b, np.zeros((1, 2)))[0])


def closures_intersect(a: Polygon, b: Polygon) -> bool:
    for p1, p2 in a.edges():
        for p3, p4 in b.edges():
            if segments_intersect(p1, p2, p3, p4):
                return True
    return a.contains(b.coords[0]) or b.contains(a.coords[0])


def distance_bounds(a: Polygon, b: Polygon) -> tuple[float, float]:
    """Support ``(r_min, r_max)`` of the distance between points of a and b."""
    a, b = Polygon(a), Polygon(b)
    if closures_intersect(a, b):
        r_min = 0.0
    else:
        r_min = min(segment_distance(p1, p2, p3, p4)
                    for p1, p2 in a.edges() for p3, p4 in b.edges())
    diff = a.coords[:, None, :] - b.coords[None, :, :]
    r_max = float(np.sqrt((diff ** 2).sum(axis=-1)).max())
    return r_min, r_max


__all__ = [
    "Point", "Polygon", "Triangle", "TriangleDecomposition", "signed_area", "translate",
    "triangulate", "line_intersection", "circle_line_intersection", "convex_clip",
    "intersection_area", "overlap_areas", "distance_bounds", "segments_intersect",
    "segment_distance", "closures_intersect",
]
