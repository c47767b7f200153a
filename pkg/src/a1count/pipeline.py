"""Assemble the counts n_1, ..., n_7 from the torsion and relation routes.

For each degree ``d`` the torsion route sums ``weight * n(model;)`` over the
Cremona-minimal models found by :func:`a1count.torsion.model_weights`.  For
``d <= 6`` the relation engine also produces ``n(d;;)`` directly; the two must
agree.  At ``d = 6`` that agreement is an equation in the unknown ``x``, and
solving it is what makes ``d = 7`` computable.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .affine import AffineCount
from .classes import PlaneClass, TangencyKey
from .fixtures import FixtureReport, FixtureSet, check_fixtures, load_fixtures
from .tables import E_MAX, X_KEY, Solution, solved_tables
from .torsion import STANDARD, SurfaceConfig, base_points, model_weights

__all__ = [
    "RouteDisagreement",
    "DegreeResult",
    "Report",
    "model_key",
    "torsion_route",
    "engine_value",
    "solve_x",
    "compute_n",
    "display_weights",
    "cor43_breakdown",
    "build_report",
    "CONDITIONAL_NOTE",
    "GENERIC_CUBIC_NOTE",
]

DEGREES = range(1, 8)

CONDITIONAL_NOTE = (
    "conditional on the transversality assumption for the moduli of "
    "degree 5 and 6 curves used to derive the tables"
)
GENERIC_CUBIC_NOTE = (
    "generic case: P of order 9 on a general boundary cubic; if P is a flex "
    "the count of cubics changes"
)


class RouteDisagreement(ArithmeticError):
    """The torsion route and the relation engine give different values."""


def _model_order(m: PlaneClass):
    c = m.canonical()
    return (c.e, tuple(-x for x in c.a))


def model_key(model: PlaneClass) -> TangencyKey:
    c = model.canonical()
    return TangencyKey(c.e, c.a, ())


@dataclass(frozen=True)
class DegreeResult:
    d: int
    value: AffineCount
    weights: dict[PlaneClass, int]
    model_values: dict[PlaneClass, AffineCount]
    engine: AffineCount | None
    note: str = ""

    def breakdown(self, x: int | None = None) -> str:
        parts = []
        for m, w in self.weights.items():
            v = self.model_values[m]
            v = AffineCount.lift(v.subs(x)) if x is not None else v
            parts.append(f"{w}*n{model_key(m).pretty()[1:]}[={v}]")
        return " + ".join(parts)


def torsion_route(d: int, cfg: SurfaceConfig = STANDARD, solution: Solution | None = None, row: str | None = None):
    """Weights, model values and the weighted total for degree ``d``.

    Every coset row is evaluated; differing weights across rows are an error.
    """
    sol = solution or solved_tables()
    points = base_points(d, cfg)
    if row is not None:
        points = {row: points[row]}
    weights = None
    for r, pt in points.items():
        w = model_weights(d, pt, cfg)
        if weights is None:
            weights = w
        elif w != weights:
            raise RouteDisagreement(f"d={d}: model weights depend on the coset row ({r})")
    weights = {m: weights[m] for m in sorted(weights, key=_model_order)}
    values = {m: sol[model_key(m)] for m in weights}
    total = AffineCount()
    for m, w in weights.items():
        total = total + w * values[m]
    return weights, values, total


def engine_value(d: int, solution: Solution | None = None) -> AffineCount | None:
    if d > E_MAX:
        return None
    return (solution or solved_tables())[TangencyKey(d, (), ())]


def solve_x(solution: Solution | None = None, cfg: SurfaceConfig = STANDARD) -> int:
    """Equate the engine's affine ``n(6;;)`` with the torsion count at degree 6."""
    sol = solution or solved_tables()
    lhs = engine_value(6, sol)
    _, _, rhs = torsion_route(6, cfg, sol)
    if not rhs.is_constant:
        raise ArithmeticError(f"torsion route at d=6 still depends on x: {rhs}")
    if lhs.c1 == 0:
        raise ArithmeticError("n(6;;) does not involve x, so x is not determined")
    x = (rhs.c0 - lhs.c0) / lhs.c1
    if x.denominator != 1:
        raise ArithmeticError(f"x = {x} is not an integer")
    return int(x)


def compute_n(d: int, symbolic: bool = False, solution: Solution | None = None,
              cfg: SurfaceConfig = STANDARD) -> DegreeResult:
    """Count A1-curves of degree ``d`` through the torsion route.

    With ``symbolic`` the values are left affine in ``x``; otherwise ``x`` is
    resolved first.  For ``d <= 6`` disagreement with the engine raises
    :class:`RouteDisagreement`.
    """
    if d not in DEGREES:
        raise ValueError(f"degree must be in 1..7, got {d}")
    sol = solution or solved_tables()
    weights, values, total = torsion_route(d, cfg, sol)
    engine = engine_value(d, sol)
    if not symbolic:
        x = solve_x(sol, cfg)
        values = {m: AffineCount.lift(v.subs(x)) for m, v in values.items()}
        total = AffineCount.lift(total.subs(x))
        engine = AffineCount.lift(engine.subs(x)) if engine is not None else None
    # symbolically, n(6;;) is affine in x and the torsion total is the number it must equal
    if engine is not None and not (symbolic and d == 6) and engine != total:
        raise RouteDisagreement(f"d={d}: torsion route {total} != engine {engine}")
    note = CONDITIONAL_NOTE if d == 7 else GENERIC_CUBIC_NOTE if d == 3 else ""
    return DegreeResult(d, total, weights, values, engine, note)


def display_weights(d: int, solution: Solution | None = None, cfg: SurfaceConfig = STANDARD):
    """Weights with models of equal count merged into the lowest-degree one.

    Displayed sums often combine models whose counts coincide; at ``d = 6``,
    ``(2;)`` and ``(3;2,1)`` both count 1 and appear together with weight 21.
    """
    sol = solution or solved_tables()
    weights, values, _ = torsion_route(d, cfg, sol)
    merged: dict[PlaneClass, int] = {}
    rep: dict[AffineCount, PlaneClass] = {}
    for m in weights:
        v = values[m]
        if v not in rep:
            rep[v] = m
            merged[m] = 0
        merged[rep[v]] += weights[m]
    return merged


def cor43_breakdown(solution: Solution | None = None, fixtures: FixtureSet | None = None) -> dict[str, int]:
    """Quartics by the type of singularity at the boundary point."""
    sol = solution or solved_tables()
    fx = (fixtures or load_fixtures()).as_dict()

    def fixture(k: str) -> int:
        v = fx[TangencyKey.parse(k)]
        return int(v)

    return {
        "smooth": int(sol[TangencyKey.parse("4;;")]),
        "nodal": int(sol[TangencyKey.parse("4;;2")]),
        "tacnodal": fixture("4;;2,2"),
        "triple-contact": fixture("4;;2,2,2"),
        "triple point": int(sol[TangencyKey.parse("4;;3")]),
    }


@dataclass
class Report:
    n: dict[int, int]
    x: int
    route_details: dict[int, DegreeResult]
    fixture_results: FixtureReport
    consequences: dict[str, int] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.fixture_results.ok


def build_report(fixtures: FixtureSet | None = None, cfg: SurfaceConfig = STANDARD) -> Report:
    sol = solved_tables()
    x = solve_x(sol, cfg)
    details = {d: compute_n(d, solution=sol, cfg=cfg) for d in DEGREES}
    n = {d: int(r.value) for d, r in details.items()}
    fx = check_fixtures(fixtures or load_fixtures(), sol, x)
    consequences = {
        X_KEY.pretty(): x,
        TangencyKey.parse("6;2^5,1;").pretty(): int(sol[TangencyKey.parse("6;2^5,1;")].subs(x)),
        TangencyKey.parse("6;2^8;").pretty(): int(sol[TangencyKey.parse("6;2^8;")].subs(x)),
    }
    return Report(n, x, details, fx, consequences)
