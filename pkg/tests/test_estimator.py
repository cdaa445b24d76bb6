import numpy as np
import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError

from polydist import (GeometryError, MonteCarloDistances, PolygonDistanceDistribution,
                      disjoint_triangles_example_pdf)
from polydist.validation import check_polygon, check_positive_int, check_radii

from conftest import FIG1_A, FIG1_B, POLY1, POLY2, UNIT_SQUARE


def test_get_set_params():
    est = PolygonDistanceDistribution(theta_divisions=720, r_points=50)
    params = est.get_params()
    assert params == dict(theta_divisions=720, r_points=50, scheme="trapezoid",
                          method="direct", n_jobs=1)
    est.set_params(scheme="midpoint")
    assert est.scheme == "midpoint"
    assert clone(est).get_params() == est.get_params()


def test_fit_fig1():
    est = PolygonDistanceDistribution(r_points=40).fit(FIG1_A, FIG1_B)
    assert est.support_ == pytest.approx((1 / np.sqrt(2), np.sqrt(5)))
    r = np.array([0.9, 1.2, 1.6, 2.1])
    expected = [disjoint_triangles_example_pdf(x) for x in r]
    np.testing.assert_allclose(est.pdf(r), expected, atol=2e-3)
    np.testing.assert_allclose(est.predict(r.reshape(-1, 1)), est.pdf(r))
    out = est.transform(r)
    assert out.shape == (4, 2)
    assert np.all(np.diff(out[:, 1]) > 0)
    assert est.cdf([0.0, 10.0]).tolist() == [0.0, 1.0]


def test_coincident_when_y_missing():
    est = PolygonDistanceDistribution(r_points=20).fit(UNIT_SQUARE)
    assert est.polygon_b_ is est.polygon_a_
    assert est.distribution_.is_normalized()


def test_triangle_sum_method():
    direct = PolygonDistanceDistribution(r_points=15).fit(POLY1, POLY2)
    mixed = PolygonDistanceDistribution(r_points=15, method="triangle_sum").fit(POLY1, POLY2)
    np.testing.assert_allclose(mixed.distribution_.pdf_values, direct.distribution_.pdf_values,
                               rtol=1e-9, atol=1e-12)


def test_not_fitted():
    with pytest.raises(NotFittedError):
        PolygonDistanceDistribution().pdf([1.0])
    with pytest.raises(NotFittedError):
        MonteCarloDistances().cdf([1.0])


def test_bad_inputs():
    with pytest.raises(ValueError):
        PolygonDistanceDistribution(method="kinematic").fit(UNIT_SQUARE)
    with pytest.raises(ValueError):
        PolygonDistanceDistribution(theta_divisions=4).fit(UNIT_SQUARE)
    with pytest.raises(GeometryError):
        PolygonDistanceDistribution().fit([(0, 0), (1, 1), (1, 0), (0, 1)])


def test_monte_carlo_estimator():
    model = PolygonDistanceDistribution().fit(FIG1_A, FIG1_B)
    mc = MonteCarloDistances(n_samples=2000, seed=4, bins=20).fit(FIG1_A, FIG1_B)
    assert mc.samples_.n_pairs == 2000 ** 2
    assert mc.ks_statistic(model) < 0.03
    hist = mc.histogram()
    assert hist.shape == (20, 2)
    assert mc.cdf([0.0, 3.0]).tolist() == [0.0, 1.0]


def test_validation_helpers():
    assert check_polygon(np.array(UNIT_SQUARE)).area == 1.0
    with pytest.raises(ValueError):
        check_polygon([1, 2, 3])
    np.testing.assert_array_equal(check_radii(2.0), [2.0])
    np.testing.assert_array_equal(check_radii([[1.0], [2.0]]), [1.0, 2.0])
    for bad in ([-1.0], [np.inf], np.ones((2, 2))):
        with pytest.raises(ValueError):
            check_radii(bad)
    with pytest.raises(ValueError):
        check_positive_int(True, "n")
    assert check_positive_int(3.0, "n") == 3
