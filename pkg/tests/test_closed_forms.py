import math

import numpy as np
import pytest
from scipy.integrate import quad

from polydist import PiecewisePdf, circles_coincident_pdf, disjoint_triangles_example_pdf
from polydist.closed_forms import DISJOINT_TRIANGLES_PDF, DISJOINT_TRIANGLES_THETA_INTEGRAL

BREAKS = DISJOINT_TRIANGLES_PDF.breakpoints


class TestCircles:
    def test_zero_at_ends(self):
        assert circles_coincident_pdf(1, 0) == 0.0
        assert circles_coincident_pdf(1, 2) == 0.0
        assert circles_coincident_pdf(1, 3) == 0.0

    def test_at_radius(self):
        expected = (2 / math.pi) * (2 * math.pi / 3 - math.sqrt(3) / 2)
        assert circles_coincident_pdf(1, 1) == pytest.approx(expected, rel=1e-14)
        assert expected == pytest.approx(0.782004, abs=1e-6)

    @pytest.mark.parametrize("R", [0.5, 1.0, 3.0])
    def test_normalized(self, R):
        total, _ = quad(lambda r: circles_coincident_pdf(R, r), 0, 2 * R, epsabs=1e-13, epsrel=1e-13)
        assert total == pytest.approx(1.0, abs=1e-9)

    @pytest.mark.parametrize("R", [0.5, 2.0, 7.3])
    def test_scaling(self, R):
        for r in np.linspace(0, 2.2 * R, 23):
            assert circles_coincident_pdf(R, r) == pytest.approx(
                circles_coincident_pdf(1, r / R) / R, abs=1e-12)

    def test_bad_radius(self):
        with pytest.raises(ValueError):
            circles_coincident_pdf(0, 1)


class TestDisjointTriangles:
    def test_outside_support(self):
        assert disjoint_triangles_example_pdf(0.5) == 0.0
        assert disjoint_triangles_example_pdf(math.sqrt(5) + 0.1) == 0.0

    def test_normalized(self):
        total = sum(quad(disjoint_triangles_example_pdf, lo, hi, epsabs=1e-14, epsrel=1e-14,
                         limit=200)[0] for lo, hi in zip(BREAKS, BREAKS[1:]))
        assert total == pytest.approx(1.0, abs=1e-6)

    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_continuous_at_breakpoints(self, k):
        left = DISJOINT_TRIANGLES_PDF.pieces[k - 1](BREAKS[k])
        right = DISJOINT_TRIANGLES_PDF.pieces[k](BREAKS[k])
        assert left == pytest.approx(right, abs=1e-6)

    def test_vanishes_at_support_ends(self):
        assert disjoint_triangles_example_pdf(BREAKS[0]) == pytest.approx(0.0, abs=1e-12)
        assert disjoint_triangles_example_pdf(BREAKS[-1]) == pytest.approx(0.0, abs=1e-12)

    def test_nonnegative(self):
        r = np.linspace(BREAKS[0], BREAKS[-1], 1000)
        assert min(disjoint_triangles_example_pdf(x) for x in r) >= 0.0

    def test_prefactor(self):
        # density = r / (|A| |B|) times the angular integral, |A| = |B| = 1/2
        for r in (0.8, 1.2, 1.7, 2.1):
            assert disjoint_triangles_example_pdf(r) == pytest.approx(
                4 * r * DISJOINT_TRIANGLES_THETA_INTEGRAL(r), rel=1e-15)

    def test_breakpoint_uses_right_piece(self):
        pdf = DISJOINT_TRIANGLES_PDF
        assert pdf.piece_index(1.0) == 1
        assert pdf.piece_index(math.sqrt(5)) == 3
        assert pdf.piece_index(0.1) == -1


class TestPiecewisePdf:
    def test_validation(self):
        with pytest.raises(ValueError):
            PiecewisePdf((0.0, 0.0, 1.0), (abs, abs))
        with pytest.raises(ValueError):
            PiecewisePdf((0.0, 1.0), (abs, abs))

    def test_evaluate(self):
        p = PiecewisePdf((0.0, 1.0, 2.0), (lambda r: r, lambda r: 2 - r))
        assert [p(x) for x in (-1, 0.5, 1.0, 1.5, 2.0, 3)] == [0.0, 0.5, 1.0, 0.5, 0.0, 0.0]
