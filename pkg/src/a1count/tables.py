"""Affine-line counts ``n(e; a; b)`` from three degeneration relations.

* trailing-one: ``n(e; a; b) = n(e; a; b, 1)`` when ``d(e; a; b) > 0``;
* degree-zero-conversion: for ``d(e; a, k;) = 0``, ``n(e; a, k;) = n(e; a; k)``;
* point-merge: for ``d = d(e; a, k;) > 0``,
  ``n(e; a, k;) = n(e; a; k) + (1 + [d == 1] k) n(e; a; k + 1)``.

Point-only keys of degree 1 are rational-curve counts (the seeds), except
``n(6; 2^8, 1;)``, which stays the symbol ``x``.  The system is solved over
``Q + Q x`` by sparse elimination.  Only keys with at most one contact order
are derived.  Longer contact sequences are checked against fixtures.
"""
from __future__ import annotations

import os
from collections import defaultdict
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .affine import X, AffineCount
from .classes import TangencyKey, genus, log_degree, tri
from .gw import UNREACHABLE, UnknownXError, count, reduce

__all__ = [
    "Relation",
    "Solution",
    "InconsistentSystem",
    "key_universe",
    "seeds",
    "generate_relations",
    "solve",
    "solved_tables",
    "X_KEY",
    "EXTRA_SEED_KEY",
    "EXTRA_SEED_VALUE",
    "E_MAX",
]

E_MAX = 6
X_KEY = TangencyKey(6, (2,) * 8 + (1,), ())
EXTRA_SEED_KEY = TangencyKey(6, (2,) * 8, (2,))
EXTRA_SEED_VALUE = 12

TRAILING_ONE = "trailing-one"
DEGREE_ZERO = "degree-zero-conversion"
POINT_MERGE = "point-merge"


class InconsistentSystem(ArithmeticError):
    pass


@dataclass(frozen=True)
class Relation:
    """``left = sum(coef * key for coef, key in right)``; vanishing keys omitted."""

    kind: str
    left: TangencyKey
    right: tuple[tuple[int, TangencyKey], ...]

    def residual(self, values) -> AffineCount:
        r = AffineCount.lift(values[self.left])
        for c, k in self.right:
            r = r - c * values[k]
        return r

    def __str__(self):
        rhs = " + ".join(f"{c}*{k.pretty()}" if c != 1 else k.pretty() for c, k in self.right) or "0"
        return f"[{self.kind}] {self.left.pretty()} = {rhs}"


def _multisets(total: int, largest: int, budget: int):
    """Descending tuples of positive ints with sum <= total and genus drop <= budget."""
    def rec(rem, mx, bud):
        yield ()
        for p in range(min(rem, mx), 0, -1):
            cost = tri(p)
            if cost > bud:
                continue
            for rest in rec(rem - p, p, bud - cost):
                yield (p,) + rest
    yield from rec(total, largest, budget)


@lru_cache(maxsize=None)
def key_universe(e_max: int = E_MAX) -> tuple[TangencyKey, ...]:
    """Nonvanishing keys with ``e <= e_max`` and at most one contact order."""
    if e_max > E_MAX:
        raise ValueError(f"tables are only built up to e = {E_MAX}")
    out = []
    for e in range(1, e_max + 1):
        budget = tri(e - 1)
        for a in _multisets(3 * e, max(e, 1), budget):
            for b in [()] + [(k,) for k in range(1, e + 2)]:
                k = TangencyKey(e, a, b)
                if not k.vanishes():
                    out.append(k)
    out.sort(key=lambda k: k.sort_key)
    return tuple(out)


def _threads() -> int:
    raw = os.environ.get("A1COUNT_THREADS", "1")
    try:
        n = int(raw)
    except ValueError:
        n = 1
    return (os.cpu_count() or 1) if n == 0 else max(1, n)


def _seed_value(k: TangencyKey) -> AffineCount:
    if k == X_KEY:
        return X
    try:
        return AffineCount.lift(count(reduce(k.plane_class())))
    except UnknownXError as exc:
        raise AssertionError(f"seed {k.pretty()} hit the unreachable class") from exc


def seeds(e_max: int = E_MAX) -> dict[TangencyKey, AffineCount]:
    """Known values: degree-one point-only keys, ``x`` and ``n(6; 2^8; 2) = 12``."""
    keys = [k for k in key_universe(e_max) if not k.b and log_degree(k) == 1]
    n = _threads()
    if n > 1:
        with ThreadPoolExecutor(max_workers=n) as pool:
            vals = list(pool.map(_seed_value, keys))
    else:
        vals = [_seed_value(k) for k in keys]
    out = dict(zip(keys, vals))
    if e_max >= EXTRA_SEED_KEY.e:
        out[EXTRA_SEED_KEY] = AffineCount.lift(EXTRA_SEED_VALUE)
    return out


def _remove_one(a: tuple[int, ...], k: int) -> tuple[int, ...]:
    i = a.index(k)
    return a[:i] + a[i + 1:]


def _term(coef: int, key: TangencyKey):
    return [] if key.vanishes() or coef == 0 else [(coef, key)]


def generate_relations(e_max: int = E_MAX) -> list[Relation]:
    """All three rule families over :func:`key_universe`."""
    rels = []
    for key in key_universe(e_max):
        if key.b:
            continue
        d = log_degree(key)
        if d > 0:
            ext = TangencyKey(key.e, key.a, (1,))
            rels.append(Relation(TRAILING_ONE, key, tuple(_term(1, ext))))
        for k in sorted(set(key.a)):
            rest = _remove_one(key.a, k)
            t1 = TangencyKey(key.e, rest, (k,))
            if d == 0:
                rels.append(Relation(DEGREE_ZERO, key, tuple(_term(1, t1))))
            else:
                t2 = TangencyKey(key.e, rest, (k + 1,))
                coef = 1 + (k if d == 1 else 0)
                rels.append(Relation(POINT_MERGE, key, tuple(_term(1, t1) + _term(coef, t2))))
    return rels


@dataclass
class Solution:
    values: dict[TangencyKey, AffineCount]
    relations: list[Relation]
    seeds: dict[TangencyKey, AffineCount]
    unresolved: list[TangencyKey] = field(default_factory=list)

    def __getitem__(self, key: TangencyKey) -> AffineCount:
        if key.vanishes():
            return AffineCount()
        key = key.normalize() if key.b and len(key.b) > 1 else key
        return self.values[key]

    def get(self, key: TangencyKey):
        try:
            return self[key]
        except KeyError:
            return None

    def substituted(self, x: int) -> dict[TangencyKey, int]:
        out = {}
        for k, v in self.values.items():
            s = v.subs(x)
            if s.denominator != 1:
                raise ArithmeticError(f"{k.pretty()} = {v} is not integral at x = {x}")
            out[k] = int(s)
        return out

    def residuals(self) -> dict[Relation, AffineCount]:
        return {r: r.residual(self) for r in self.relations}


def _rows(relations, seed_values):
    rows = []
    for r in relations:
        row = defaultdict(Fraction)
        row[r.left] += 1
        for c, k in r.right:
            row[k] -= c
        rows.append(({k: v for k, v in row.items() if v}, AffineCount(), r))
    for k, v in seed_values.items():
        rows.append(({k: Fraction(1)}, v, None))
    return rows


def _describe(origin, key=None):
    if origin is None:
        return f"seed {key.pretty() if key else ''}".strip()
    return str(origin)


def _eliminate(rows, keys):
    """Sparse elimination: single-unknown rows first, then Gaussian on the rest."""
    order = {k: i for i, k in enumerate(sorted(keys, key=lambda k: k.sort_key))}
    known: dict[TangencyKey, AffineCount] = {}
    by_key = defaultdict(list)
    for idx, (coefs, _, _) in enumerate(rows):
        for k in coefs:
            by_key[k].append(idx)
    pending = list(range(len(rows)))
    while pending:
        nxt = set()
        for idx in pending:
            coefs, rhs, origin = rows[idx]
            unknown = [k for k in coefs if k not in known]
            if len(unknown) != 1:
                continue
            u = unknown[0]
            acc = rhs
            for k, c in coefs.items():
                if k != u:
                    acc = acc - c * known[k]
            known[u] = acc / coefs[u]
            nxt.update(by_key[u])
        pending = sorted(i for i in nxt if any(k not in known for k in rows[i][0]))
    # the rows that still carry two or more unknowns are handled by dense Gaussian elimination
    rest = []
    for coefs, rhs, origin in rows:
        unknown = {k: c for k, c in coefs.items() if k not in known}
        if not unknown:
            continue
        acc = rhs
        for k, c in coefs.items():
            if k in known:
                acc = acc - c * known[k]
        rest.append((unknown, acc, origin))
    if rest:
        pivots = {}
        for unknown, acc, origin in rest:
            coefs = dict(unknown)
            for pk in sorted(pivots, key=order.get):
                if pk in coefs:
                    prow, pacc = pivots[pk]
                    f = coefs[pk]
                    for k, c in prow.items():
                        coefs[k] = coefs.get(k, 0) - f * c
                        if not coefs[k]:
                            del coefs[k]
                    acc = acc - f * pacc
            if not coefs:
                if acc:
                    raise InconsistentSystem(f"inconsistent: {_describe(origin)} leaves {acc}")
                continue
            pk = min(coefs, key=order.get)
            f = coefs[pk]
            prow = {k: c / f for k, c in coefs.items()}
            pacc = acc / f
            for qk, (qrow, qacc) in list(pivots.items()):
                if pk in qrow:
                    g = qrow[pk]
                    for k, c in prow.items():
                        qrow[k] = qrow.get(k, 0) - g * c
                        if not qrow[k]:
                            del qrow[k]
                    pivots[qk] = (qrow, qacc - g * pacc)
            pivots[pk] = (prow, pacc)
        for pk, (prow, pacc) in pivots.items():
            if set(prow) == {pk}:
                known[pk] = pacc
    return known


def solve(e_max: int = E_MAX) -> Solution:
    """Solve every derivable key with ``e <= e_max``.

    Raises :class:`InconsistentSystem` if any relation or seed fails at the
    solution, or if a value is not integral.
    """
    keys = key_universe(e_max)
    rels = generate_relations(e_max)
    seed_values = seeds(e_max)
    rows = _rows(rels, seed_values)
    known = _eliminate(rows, keys)
    for k, v in known.items():
        if not v.is_integral:
            raise InconsistentSystem(f"non-integral value {k.pretty()} = {v}")
    for coefs, rhs, origin in rows:
        if all(k in known for k in coefs):
            acc = -rhs
            for k, c in coefs.items():
                acc = acc + c * known[k]
            if acc:
                key = next(iter(coefs))
                raise InconsistentSystem(f"nonzero residual {acc} in {_describe(origin, key)}")
    unresolved = [k for k in keys if k not in known]
    values = {k: known[k] for k in keys if k in known}
    return Solution(values, rels, seed_values, unresolved)


@lru_cache(maxsize=None)
def solved_tables(e_max: int = E_MAX) -> Solution:
    """Cached :func:`solve`."""
    return solve(e_max)
