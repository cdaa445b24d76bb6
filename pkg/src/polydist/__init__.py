"""Distance distributions between uniform random points in two simple polygons."""

from .closed_forms import PiecewisePdf, circles_coincident_pdf, disjoint_triangles_example_pdf
from .distribution import (DistanceDistribution, QuadratureConfig, Scheme, cdf_curve, overlap,
                           pdf_at, pdf_curve, pdf_via_triangle_sum)
from .estimator import MonteCarloDistances, PolygonDistanceDistribution
from .exceptions import GeometryError, PolydistError, ResourceError
from .geometry import (Point, Polygon, Triangle, TriangleDecomposition, circle_line_intersection,
                       convex_clip, distance_bounds, intersection_area, line_intersection,
                       signed_area, translate, triangulate)
from .montecarlo import (SampleSet, ecdf, empirical_distances, histogram_pdf, ks_statistic,
                         sample_polygon, sample_triangle)

__version__ = "0.1.0"
