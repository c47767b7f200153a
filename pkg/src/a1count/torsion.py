"""Torsion points of the boundary cubic and the linear-equivalence bookkeeping
for curves on its triple cover.

The cubic is identified with ``(R/Z)^2`` using a flex as origin; every point
that occurs here is torsion, so ``(Q/Z)^2`` with exact fractions is enough.
The triple cover of the plane branched along the cubic is a cubic surface.
Blowing it down to a plane ``Z`` contracts six lines meeting the cubic at the
3-torsion points ``p``.  The remaining 3-torsion points are ``q``.  A class
``eH - sum a_i E_i`` cut out at a point ``P`` with contact ``d`` exists iff
``d(P - O_Z) + sum a_i (p_i - O_Z) = 0``, where ``O_Z`` is a flex of the
image cubic.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import lcm

from .classes import PlaneClass, enumerate_y_classes, minimize

__all__ = [
    "TorsionPoint",
    "SurfaceConfig",
    "tp_order",
    "coset_row",
    "base_points",
    "points_of_order",
    "relation_holds",
    "ordered_counts",
    "model_weights",
    "ROWS",
]

# second coordinate of d*P: 0 or 1/3 share a row, 2/3 is the other
ROWS = ("0", "2/3")


@dataclass(frozen=True)
class TorsionPoint:
    """A point of ``(Q/Z)^2``; both coordinates are reduced into ``[0, 1)``."""

    u: Fraction
    v: Fraction

    def __post_init__(self):
        object.__setattr__(self, "u", Fraction(self.u) % 1)
        object.__setattr__(self, "v", Fraction(self.v) % 1)

    @classmethod
    def zero(cls) -> "TorsionPoint":
        return cls(Fraction(0), Fraction(0))

    def __add__(self, other: "TorsionPoint") -> "TorsionPoint":
        return TorsionPoint(self.u + other.u, self.v + other.v)

    def __neg__(self) -> "TorsionPoint":
        return TorsionPoint(-self.u, -self.v)

    def __sub__(self, other: "TorsionPoint") -> "TorsionPoint":
        return TorsionPoint(self.u - other.u, self.v - other.v)

    def __mul__(self, k: int) -> "TorsionPoint":
        return TorsionPoint(self.u * k, self.v * k)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return self.u == 0 and self.v == 0

    def __str__(self):
        return f"({self.u}, {self.v})"


def tp_order(p: TorsionPoint) -> int:
    """Smallest ``n >= 1`` with ``n*p = 0``."""
    return lcm(p.u.denominator, p.v.denominator)


def _tp(u, v) -> TorsionPoint:
    return TorsionPoint(Fraction(u), Fraction(v))


def _default_q():
    return (_tp(0, Fraction(2, 3)), _tp(Fraction(1, 3), Fraction(2, 3)), _tp(Fraction(2, 3), Fraction(2, 3)))


def _default_p():
    q = set(_default_q())
    pts = [_tp(Fraction(i, 3), Fraction(j, 3)) for j in range(3) for i in range(3)]
    return tuple(p for p in pts if p not in q)


@dataclass(frozen=True)
class SurfaceConfig:
    """Positions of the six contracted lines, the other three 3-torsion
    points, and the flex ``O_Z`` of the image cubic."""

    p: tuple[TorsionPoint, ...] = field(default_factory=_default_p)
    q: tuple[TorsionPoint, ...] = field(default_factory=_default_q)
    o_z: TorsionPoint = field(default_factory=lambda: _tp(Fraction(1, 9), 0))

    def __post_init__(self):
        if len(self.p) != 6 or len(self.q) != 3:
            raise ValueError("need six p points and three q points")
        pts = set(self.p) | set(self.q)
        if len(pts) != 9 or any(3 * t != TorsionPoint.zero() for t in pts):
            raise ValueError("p and q must be the nine 3-torsion points")
        if tp_order(3 * self.o_z) != 3:
            raise ValueError("o_z must have order 9")

    def _key(self):
        return (self.p, self.q, self.o_z)


STANDARD = SurfaceConfig()


def coset_row(d: int, pt: TorsionPoint) -> str:
    """Row label of ``d*P``: ``"0"`` for second coordinate 0 or 1/3, else ``"2/3"``."""
    return "2/3" if (d * pt).v == Fraction(2, 3) else "0"


def points_of_order(n: int) -> list[TorsionPoint]:
    """All points of exact order ``n``, in a fixed order."""
    pts = [_tp(Fraction(i, n), Fraction(j, n)) for j in range(n) for i in range(n)]
    return [p for p in pts if tp_order(p) == n]


def _admissible(d: int, pt: TorsionPoint, cfg: SurfaceConfig) -> bool:
    # a point on a contracted line is excluded (only possible for d = 1)
    return tp_order(pt) == 3 * d and pt not in cfg.p


def base_points(d: int, cfg: SurfaceConfig = STANDARD) -> dict[str, TorsionPoint]:
    """One admissible point of exact order ``3d`` per coset row.

    For ``d = 1`` the ``"0"`` row consists of the contracted points
    themselves and is omitted.
    """
    if d < 1:
        raise ValueError("degree must be >= 1")
    n = 3 * d
    cands = {"0": _tp(Fraction(1, n), 0), "2/3": _tp(Fraction(1, n), Fraction(2, n))}
    out = {}
    for row, pt in cands.items():
        if _admissible(d, pt, cfg) and coset_row(d, pt) == row:
            out[row] = pt
        else:
            alt = [p for p in points_of_order(n) if _admissible(d, p, cfg) and coset_row(d, p) == row]
            if alt:
                out[row] = alt[0]
    return out


def relation_holds(d: int, pt: TorsionPoint, a, cfg: SurfaceConfig = STANDARD) -> bool:
    """Whether ``d(P - O_Z) + sum a_i (p_i - O_Z)`` vanishes."""
    total = d * (pt - cfg.o_z)
    for ai, pi in zip(a, cfg.p):
        total = total + ai * (pi - cfg.o_z)
    return total.is_zero()


@lru_cache(maxsize=None)
def _candidate_table(d: int, cfg: SurfaceConfig):
    """Every ordered 6-tuple realizing a candidate multiset, with its partial sum.

    Sums are stored in integer coordinates over ``N = lcm(9, 3d)`` so the
    per-point check is a tuple comparison.
    """
    n = lcm(9, 3 * d, *(t.u.denominator for t in cfg.p), cfg.o_z.u.denominator, cfg.o_z.v.denominator)
    cands = {tuple(c.a): c for c in enumerate_y_classes(d)}
    steps = [((pi.u - cfg.o_z.u) * n, (pi.v - cfg.o_z.v) * n) for pi in cfg.p]
    rows = []
    for a in product(range(d + 1), repeat=6):
        key = tuple(sorted(a, reverse=True))
        c = cands.get(key)
        if c is None:
            continue
        su = sum(x * s[0] for x, s in zip(a, steps))
        sv = sum(x * s[1] for x, s in zip(a, steps))
        rows.append((a, c, (int(su) % n, int(sv) % n)))
    return n, list(cands.values()), rows


def ordered_counts(d: int, pt: TorsionPoint, cfg: SurfaceConfig = STANDARD) -> dict[PlaneClass, int]:
    """Number of ordered multiplicity 6-tuples satisfying the relation, per candidate.

    Keys are the candidate classes of :func:`enumerate_y_classes` (zero
    counts included).
    """
    if tp_order(pt) != 3 * d:
        raise ValueError(f"point {pt} does not have order {3 * d}")
    n, cands, rows = _candidate_table(d, cfg)
    du = d * (pt.u - cfg.o_z.u) * n
    dv = d * (pt.v - cfg.o_z.v) * n
    target = (int(-du) % n, int(-dv) % n)
    counts = {c: 0 for c in cands}
    for a, c, s in rows:
        if s == target:
            counts[c] += 1
    return counts


def model_weights(d: int, pt: TorsionPoint, cfg: SurfaceConfig = STANDARD) -> dict[PlaneClass, int]:
    """Solutions grouped by Cremona-minimal model, divided by the Galois orbit size 3."""
    totals: dict[PlaneClass, int] = defaultdict(int)
    for c, k in ordered_counts(d, pt, cfg).items():
        if k:
            totals[minimize(c)] += k
    out = {}
    for model, k in sorted(totals.items(), key=lambda kv: (kv[0].e, kv[0].a)):
        if k % 3:
            raise ArithmeticError(f"model {model} has {k} solutions, not divisible by 3")
        out[model] = k // 3
    return out
