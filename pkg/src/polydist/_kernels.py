"""Compiled inner loops for convex clipping and overlap-area sums.

Everything here works on plain float64 arrays. Triangles are stored as
``(n, 3, 2)`` arrays with counter-clockwise vertices.
"""

import numpy as np
from numba import njit

# Points closer than this (input units) to a clip line count as on it.
EPS = 1e-12

_MAXV = 16


@njit(cache=True, nogil=True)
def _clip_halfplane(src, n_src, dst, px, py, qx, qy):
    # keep the part of src left of the directed line p->q
    ex = qx - px
    ey = qy - py
    elen = np.sqrt(ex * ex + ey * ey)
    tol = EPS * elen
    n_dst = 0
    if n_src == 0:
        return 0
    sx = src[n_src - 1, 0]
    sy = src[n_src - 1, 1]
    ds = ex * (sy - py) - ey * (sx - px)
    for k in range(n_src):
        cx = src[k, 0]
        cy = src[k, 1]
        dc = ex * (cy - py) - ey * (cx - px)
        if dc >= -tol:
            if ds < -tol:
                t = ds / (ds - dc)
                dst[n_dst, 0] = sx + t * (cx - sx)
                dst[n_dst, 1] = sy + t * (cy - sy)
                n_dst += 1
            dst[n_dst, 0] = cx
            dst[n_dst, 1] = cy
            n_dst += 1
        elif ds >= -tol:
            if ds > tol:
                t = ds / (ds - dc)
                dst[n_dst, 0] = sx + t * (cx - sx)
                dst[n_dst, 1] = sy + t * (cy - sy)
                n_dst += 1
        sx = cx
        sy = cy
        ds = dc
    return n_dst


@njit(cache=True, nogil=True)
def _shoelace(buf, n):
    s = 0.0
    x0 = buf[0, 0]
    y0 = buf[0, 1]
    for k in range(1, n - 1):
        s += (buf[k, 0] - x0) * (buf[k + 1, 1] - y0) - (buf[k + 1, 0] - x0) * (buf[k, 1] - y0)
    return 0.5 * s


@njit(cache=True, nogil=True)
def clip_convex(subject, clip):
    """Sutherland-Hodgman clip of a convex polygon by a convex CCW polygon."""
    cap = subject.shape[0] + clip.shape[0] + 1
    buf1 = np.empty((cap, 2))
    buf2 = np.empty((cap, 2))
    n = subject.shape[0]
    for k in range(n):
        buf1[k, 0] = subject[k, 0]
        buf1[k, 1] = subject[k, 1]
    m = clip.shape[0]
    for e in range(m):
        f = e + 1 if e + 1 < m else 0
        n = _clip_halfplane(buf1, n, buf2, clip[e, 0], clip[e, 1], clip[f, 0], clip[f, 1])
        buf1, buf2 = buf2, buf1
        if n == 0:
            break
    return buf1[:n].copy()


@njit(cache=True, nogil=True)
def _pair_area(ta, tb, dx, dy, buf1, buf2):
    for k in range(3):
        buf1[k, 0] = tb[k, 0] + dx
        buf1[k, 1] = tb[k, 1] + dy
    n = 3
    for e in range(3):
        f = e + 1 if e < 2 else 0
        n = _clip_halfplane(buf1, n, buf2, ta[e, 0], ta[e, 1], ta[f, 0], ta[f, 1])
        buf1, buf2 = buf2, buf1
        if n < 3:
            return 0.0
    area = _shoelace(buf1, n)
    return area if area > 0.0 else 0.0


@njit(cache=True, nogil=True)
def triangle_bboxes(tris):
    n = tris.shape[0]
    out = np.empty((n, 4))
    for i in range(n):
        out[i, 0] = min(tris[i, 0, 0], tris[i, 1, 0], tris[i, 2, 0])
        out[i, 1] = min(tris[i, 0, 1], tris[i, 1, 1], tris[i, 2, 1])
        out[i, 2] = max(tris[i, 0, 0], tris[i, 1, 0], tris[i, 2, 0])
        out[i, 3] = max(tris[i, 0, 1], tris[i, 1, 1], tris[i, 2, 1])
    return out


@njit(cache=True, nogil=True)
def overlap_areas(tris_a, tris_b, shifts):
    """Area of ``A ∩ (B + shift)`` for every row of ``shifts``.

    Pairs are visited in a fixed (shift, i, j) order, so the result does
    not depend on how callers split the work.
    """
    box_a = triangle_bboxes(tris_a)
    box_b = triangle_bboxes(tris_b)
    ax0 = box_a[:, 0].min()
    ay0 = box_a[:, 1].min()
    ax1 = box_a[:, 2].max()
    ay1 = box_a[:, 3].max()
    bx0 = box_b[:, 0].min()
    by0 = box_b[:, 1].min()
    bx1 = box_b[:, 2].max()
    by1 = box_b[:, 3].max()
    buf1 = np.empty((_MAXV, 2))
    buf2 = np.empty((_MAXV, 2))
    ns = shifts.shape[0]
    out = np.zeros(ns)
    for s in range(ns):
        dx = shifts[s, 0]
        dy = shifts[s, 1]
        if bx0 + dx > ax1 or bx1 + dx < ax0 or by0 + dy > ay1 or by1 + dy < ay0:
            continue
        total = 0.0
        for i in range(tris_a.shape[0]):
            for j in range(tris_b.shape[0]):
                if (box_b[j, 0] + dx > box_a[i, 2] or box_b[j, 2] + dx < box_a[i, 0]
                        or box_b[j, 1] + dy > box_a[i, 3] or box_b[j, 3] + dy < box_a[i, 1]):
                    continue
                total += _pair_area(tris_a[i], tris_b[j], dx, dy, buf1, buf2)
        out[s] = total
    return out
