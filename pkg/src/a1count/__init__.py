"""Exact enumerative counts of A1-curves on a cubic surface with boundary.

The main entry points are :func:`compute_n` (the count in each degree),
:func:`solve_tables` (the solved table of point and tangency counts) and
:func:`gw_count` (genus-0 counts on blow-ups of the plane).
"""
from .affine import X, AffineCount
from .classes import PlaneClass, TangencyKey, cremona, enumerate_y_classes, genus, log_degree, minimize
from .fixtures import check_fixtures, load_fixtures
from .gw import GWEngine, UnknownXError, gw_count
from .pipeline import Report, RouteDisagreement, build_report, compute_n, cor43_breakdown, display_weights, solve_x
from .tables import generate_relations, seeds, solve, solved_tables
from .torsion import STANDARD, SurfaceConfig, TorsionPoint, base_points, model_weights, ordered_counts, relation_holds, tp_order

solve_tables = solved_tables

__all__ = [
    "AffineCount", "X", "PlaneClass", "TangencyKey", "cremona", "enumerate_y_classes", "genus",
    "log_degree", "minimize", "check_fixtures", "load_fixtures", "GWEngine", "UnknownXError",
    "gw_count", "Report", "RouteDisagreement", "build_report", "compute_n", "cor43_breakdown",
    "display_weights", "solve_x", "generate_relations", "seeds", "solve", "solved_tables",
    "solve_tables", "STANDARD", "SurfaceConfig", "TorsionPoint", "base_points", "model_weights",
    "ordered_counts", "relation_holds", "tp_order",
]
