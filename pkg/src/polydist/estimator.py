"""scikit-learn style front end for the distance-distribution pipelines.

``fit`` takes the vertices of polygon ``a`` as ``X`` and those of polygon
``b`` as ``y`` (``y=None`` means both points lie in ``a``)::

    est = PolygonDistanceDistribution(theta_divisions=360).fit(poly1, poly2)
    est.pdf([1.0, 1.5])
    est.cdf([1.0, 1.5])
"""

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from . import distribution as _dist
from . import montecarlo as _mc
from .validation import check_polygon, check_positive_int, check_radii


class PolygonDistanceDistribution(TransformerMixin, BaseEstimator):
    """Distance density between uniform points in two polygons.

    Parameters
    ----------
    theta_divisions : int, default=360
        Nodes of the angular quadrature.
    r_points : int, default=200
        Grid points spanning the support in the fitted curve.
    scheme : {"trapezoid", "midpoint"}, default="trapezoid"
        Placement of the angular nodes.
    method : {"direct", "triangle_sum"}, default="direct"
        ``"triangle_sum"`` builds the curve as the area-weighted mixture of
        triangle-pair densities.
    n_jobs : int, default=1
        Threads used to evaluate grid points.

    Attributes
    ----------
    polygon_a_, polygon_b_ : Polygon
    support_ : tuple of float
    distribution_ : DistanceDistribution
    cdf_grid_ : ndarray of shape (r_points, 2)
    """

    def __init__(self, theta_divisions=360, r_points=200, scheme="trapezoid",
                 method="direct", n_jobs=1):
        self.theta_divisions = theta_divisions
        self.r_points = r_points
        self.scheme = scheme
        self.method = method
        self.n_jobs = n_jobs

    def _config(self):
        return _dist.QuadratureConfig(self.theta_divisions, self.r_points, self.scheme)

    def fit(self, X, y=None):
        config = self._config()
        if self.method not in ("direct", "triangle_sum"):
            raise ValueError(f"unknown method {self.method!r}")
        workers = check_positive_int(self.n_jobs, "n_jobs")
        self.polygon_a_ = check_polygon(X, "X")
        self.polygon_b_ = self.polygon_a_ if y is None else check_polygon(y, "y")
        build = _dist.pdf_curve if self.method == "direct" else _dist.pdf_via_triangle_sum
        self.distribution_ = build(self.polygon_a_, self.polygon_b_, config, workers=workers)
        self.support_ = self.distribution_.support
        self.cdf_grid_ = np.array(_dist.cdf_curve(self.distribution_))
        return self

    def pdf(self, r):
        """Density at each distance, evaluated by quadrature (not interpolated)."""
        check_is_fitted(self, "distribution_")
        config = self.distribution_.config
        return np.array([_dist.pdf_at(self.polygon_a_, self.polygon_b_, x, config)
                         for x in check_radii(r)])

    def cdf(self, r):
        check_is_fitted(self, "cdf_grid_")
        g = self.cdf_grid_
        return np.interp(check_radii(r), g[:, 0], g[:, 1], left=0.0, right=1.0)

    def predict(self, X):
        return self.pdf(X)

    def transform(self, X):
        """Columns ``[pdf, cdf]`` for each distance in ``X``."""
        return np.column_stack([self.pdf(X), self.cdf(X)])

    def score(self, X, y=None):
        """Mean log-density of observed distances ``X``."""
        f = self.pdf(X)
        with np.errstate(divide="ignore"):
            return float(np.mean(np.log(f)))


class MonteCarloDistances(BaseEstimator):
    """Empirical distance distribution from uniform samples in each polygon.

    ``fit`` draws ``n_samples`` points in each polygon and keeps all
    ``n_samples**2`` cross distances in ``samples_``.
    """

    def __init__(self, n_samples=4000, seed=0, bins=40):
        self.n_samples = n_samples
        self.seed = seed
        self.bins = bins

    def fit(self, X, y=None):
        n = check_positive_int(self.n_samples, "n_samples")
        a = check_polygon(X, "X")
        b = a if y is None else check_polygon(y, "y")
        self.samples_ = _mc.empirical_distances(a, b, n, self.seed)
        return self

    def cdf(self, r):
        check_is_fitted(self, "samples_")
        return np.asarray(_mc.ecdf(self.samples_, check_radii(r)), dtype=float)

    def histogram(self):
        check_is_fitted(self, "samples_")
        return np.array(_mc.histogram_pdf(self.samples_, check_positive_int(self.bins, "bins", 2)))

    def ks_statistic(self, model):
        """KS distance to a fitted :class:`PolygonDistanceDistribution`."""
        check_is_fitted(self, "samples_")
        check_is_fitted(model, "cdf_grid_")
        return _mc.ks_statistic(self.samples_, model.cdf_grid_)
