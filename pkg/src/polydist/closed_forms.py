"""Closed-form distance densities used as reference oracles."""

from __future__ import annotations

import bisect
import math
from dataclasses import dataclass
from typing import Callable, Sequence

from numpy import vectorize

SQRT2 = math.sqrt(2.0)
SQRT5 = math.sqrt(5.0)
ROUNDOFF = 1e-12


@dataclass(frozen=True)
class PiecewisePdf:
    """Density defined by one function per interval between breakpoints.

    Intervals are half-open ``[b_k, b_{k+1})`` except the last, which is
    closed. Outside ``[b_0, b_last]`` the density is zero.
    """

    breakpoints: tuple[float, ...]
    pieces: tuple[Callable[[float], float], ...]

    def __post_init__(self):
        b = self.breakpoints
        if any(x >= y for x, y in zip(b, b[1:])):
            raise ValueError("breakpoints must be strictly ascending")
        if len(self.pieces) != len(b) - 1:
            raise ValueError("need exactly one piece per interval")

    def piece_index(self, r: float) -> int:
        b = self.breakpoints
        if r < b[0] or r > b[-1]:
            return -1
        return min(bisect.bisect_right(b, r) - 1, len(self.pieces) - 1)

    def __call__(self, r: float) -> float:
        k = self.piece_index(r)
        if k < 0:
            return 0.0
        v = float(self.pieces[k](r))
        # cancellation near the support ends leaves ~1e-14 of negative noise
        return 0.0 if -ROUNDOFF < v < 0.0 else v


def circles_coincident_pdf(R: float, r: float) -> float:
    """Distance density for two points uniform in the same disc of radius R."""
    if not R > 0:
        raise ValueError(f"R must be positive, got {R}")
    if r < 0:
        raise ValueError(f"r must be nonnegative, got {r}")
    if r >= 2 * R:
        return 0.0
    lens = 2 * R * R * math.acos(r / (2 * R)) - 0.5 * r * math.sqrt(4 * R * R - r * r)
    return 2 * r / (math.pi * R ** 4) * lens


# Reference triangles: A = (0,2),(1,1),(1,2) and B = (0,0),(1,0),(0,1).
# The four expressions below are the full-turn angular integral of the
# overlap area, piece by piece; the density multiplies by r / (|A| |B|).

def _acsc(x):
    return math.asin(1.0 / x)


def _asec(x):
    return math.acos(1.0 / x)


def _sq(x):
    # roundoff can push an exact zero slightly negative at breakpoints
    return math.sqrt(max(x, 0.0))


def _clamp(x):
    return min(1.0, max(-1.0, x))


def _theta_integral_1(r):
    s = _sq(2 * r * r - 1)
    r2 = r * r
    return (1 / 8 * (4 * s + r * _sq(4 * r2 - 2) * _sq(s / r2 + 1)
                     + 7 * r * _sq(2 * s / r2 + 2) + r * _sq(4 * r2 - 2) * _sq(1 - s / r2)
                     - 7 * r * _sq(2 - 2 * s / r2)
                     + 4 * (r2 + 2) * math.acos(_clamp((s + 1) / (2 * r))))
            - 1 / 2 * (r2 + 2) * math.acos(_clamp(-(s - 1) / (2 * r))))


def _common_23(r):
    # bracketed 1/8 term shared by the second and third pieces
    s = _sq(2 * r * r - 1)
    r2 = r * r
    return 1 / 8 * (2 * (5 * s - 6)
                    + r * (-_sq(4 * r2 - 2) * _sq(s / r2 + 1) + 9 * _sq(2 * s / r2 + 2) + 2 * r - 16)
                    + 4 * (r2 + 4) * math.asin(_clamp((1 - s) / (2 * r))))  # acsc(2r / (1 - s))


def _theta_integral_2(r):
    r2 = r * r
    w = _sq(1 - 1 / r2)
    return (r2 / 2 + math.pi * r2 / 4 - 3 * w * r + r2 * (-_acsc(r)) + _common_23(r)
            + 1 / 2 * ((6 * w - r + 4) * r - 2 * (r2 + 2) * _asec(r) - 3)
            - math.asin(1 / r) + math.acos(1 / r) + 2)


def _theta_integral_3(r):
    r2 = r * r
    t = _sq(2 * r2 - 4)
    ac = math.acos(_clamp(-(t - 2) / (2 * r)))
    return (2 * r - 2 * math.acos(1 / r) + 7 / 2 - r2 / 2
            - 2 * _sq(4 * SQRT2 * _sq(r2 - 2) / r2 + 2) * r + 2 * _sq(1 - 1 / r2) * r
            - 1 / 2 * math.pi * (r2 + 2) - SQRT2 * _sq(r2 - 2)
            + (r2 + 2) * ac + 2 * ac + _common_23(r))


def _theta_integral_4(r):
    r2 = r * r
    s = _sq(2 * r2 - 1)
    u = _sq(1 - 4 / r2)
    return (-r2 / 2 + 2 * _sq(1 - 1 / r2) * r + u * r
            + 1 / 8 * (-2 * r2 - _sq(4 * r2 - 2) * _sq(s / r2 + 1) * r + 9 * _sq(2 * s / r2 + 2) * r
                       - 16 * u * r + 10 * s
                       + 4 * (r2 + 4) * math.asin(_clamp((1 - s) / (2 * r)))
                       + 4 * (r2 + 4) * math.acos(_clamp(2 / r)) - 28)
            + 2 * math.asin(_clamp(2 / r)) - 2 * math.acos(1 / r) - 5 / 2)


DISJOINT_TRIANGLES_THETA_INTEGRAL = PiecewisePdf(
    (1 / SQRT2, 1.0, SQRT2, 2.0, SQRT5),
    (_theta_integral_1, _theta_integral_2, _theta_integral_3, _theta_integral_4),
)

# |A| = |B| = 1/2
_PREFACTOR = 1.0 / (0.5 * 0.5)

DISJOINT_TRIANGLES_PDF = PiecewisePdf(
    DISJOINT_TRIANGLES_THETA_INTEGRAL.breakpoints,
    tuple((lambda r, g=g: _PREFACTOR * r * g(r)) for g in DISJOINT_TRIANGLES_THETA_INTEGRAL.pieces),
)

DISJOINT_TRIANGLE_A = ((0.0, 2.0), (1.0, 1.0), (1.0, 2.0))
DISJOINT_TRIANGLE_B = ((0.0, 0.0), (1.0, 0.0), (0.0, 1.0))


def disjoint_triangles_example_pdf(r: float) -> float:
    """Exact distance density between the two reference disjoint triangles.

    The triangles are ``(0,2),(1,1),(1,2)`` and ``(0,0),(1,0),(0,1)``; the
    support is ``[1/sqrt(2), sqrt(5)]``.
    """
    if r < 0:
        raise ValueError(f"r must be nonnegative, got {r}")
    return DISJOINT_TRIANGLES_PDF(r)


circles_coincident_pdf_v = vectorize(circles_coincident_pdf, otypes=[float])
disjoint_triangles_example_pdf_v = vectorize(disjoint_triangles_example_pdf, otypes=[float])
