"""Exact extremal triangles in convex polygons.

Computes every 3-stable inscribed triangle, the maximum-area inscribed
triangle, every generally 3-stable triangle (corners anywhere on the
boundary), and the minimum-area enclosing triangle, all in linear time with
exact rational arithmetic, plus deliberately naive brute-force oracles for
verification.
"""

from .counters import Counters
from .exact_geom import (AT_INFINITY, EQUAL, GREATER, LESS, Coord,
                         DegenerateLineError, ExtendedPoint, Point,
                         ZeroDirectionError, dist_compare, dist_compare_ext,
                         format_rational, is_at_infinity, orientation,
                         ray_intersect)
from .polygon import (DuplicateVertex, GenerationFailure, NotConvex, Polygon,
                      PolygonError, PolygonParseError, TooFewVertices, Unit,
                      edge_unit, emit_polygon, next_unit, parse_polygon,
                      random_convex, term_end, unit_from_code, validate,
                      vertex_unit)
from .three_stable import (EmptyRightChainError, InternalInvariantError,
                           NotThreeStableError, QCorners, SweepTrace,
                           TraceRecord, VertexTriangle, all_3stable, climb,
                           enumerate_all_3stable, farthest_on_right,
                           find_one_3stable, interleaving, is_3stable,
                           is_legal, largest_rooted_triangle,
                           max_area_triangle, q_corners, rotate_and_kill,
                           triangle_area)
from .general_stable import (GTriangle, VisitRecord, boundary_position,
                             collect_visit_pairs, edge_param,
                             enumerate_g3stable, g_interleaving,
                             gadget_g3stable, generalized_rotate_and_kill)
from .enclosing import (CollinearMidpointsError, EnclosingTriangle,
                        NoCandidateError, anticomplementary,
                        anticomplementary_of, contains,
                        min_enclosing_triangle)
from . import oracle
from . import kernel

__version__ = "0.1.0"
