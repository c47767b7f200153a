"""Genus-0 counts of rational curves on blow-ups of the plane at general points.

Values come from the associativity (WDVV) relation with two divisor
insertions ``A, B`` and two point insertions.  For a class ``beta`` with
``n = -K.beta - 1 >= 3`` point conditions::

    (A.B) N(beta) = sum_{beta1 + beta2 = beta} N(beta1) N(beta2) (beta1.beta2)
        * [ (A.beta1)(B.beta2) C(n-3, n1-1) - (A.beta1)(B.beta1) C(n-3, n1) ]

The default engine uses ``A = B = H``.  Classes with fewer than three point
conditions are lowered by a Cremona move, and the line is the seed.  The class
``(6; 2^8)`` has one point condition and no lowering move, so it raises
:class:`UnknownXError`.
"""
from __future__ import annotations

import threading
from itertools import product
from math import comb

from .classes import PlaneClass, cremona

__all__ = [
    "UnknownXError",
    "reduce",
    "gw_count",
    "GWEngine",
    "wdvv_sum",
    "point_conditions",
    "UNREACHABLE",
    "H",
]

H = PlaneClass(1, ())
UNREACHABLE = PlaneClass(6, (2,) * 8)


class UnknownXError(ArithmeticError):
    """Raised for the class whose count cannot be reached by the recursion."""

    def __init__(self, cls: PlaneClass):
        super().__init__(f"count of {cls} is not determined by the recursion")
        self.cls = cls


def binom(n: int, k: int) -> int:
    return comb(n, k) if 0 <= k <= n else 0


def reduce(c: PlaneClass) -> PlaneClass:
    """Sort descending and drop multiplicities 0 and 1 (simple point conditions)."""
    if any(x < 0 for x in c.a):
        raise ValueError(f"reduce expects nonnegative multiplicities, got {c}")
    return PlaneClass(c.e, tuple(sorted((x for x in c.a if x > 1), reverse=True)))


def point_conditions(c: PlaneClass) -> int:
    return c.anticanonical_degree - 1


def _is_reduced(c: PlaneClass) -> bool:
    return c.is_exceptional() or (all(x > 1 for x in c.a) and c.a == tuple(sorted(c.a, reverse=True)))


def _splittings(beta: PlaneClass):
    """Ordered pairs (beta1, beta2) of effective-looking summands of ``beta``.

    Each side is an exceptional curve on one slot of ``beta`` or has
    ``e >= 1`` and nonnegative multiplicities.
    """
    e, a = beta.e, beta.a
    r = len(a)
    for i in range(r):
        unit = PlaneClass(0, tuple(-1 if s == i else 0 for s in range(r)))
        rest = PlaneClass(e, tuple(x + 1 if s == i else x for s, x in enumerate(a)))
        yield unit, rest
        yield rest, unit
    if any(x < 0 for x in a):
        return
    for e1 in range(1, e):
        for c in product(*(range(x + 1) for x in a)):
            yield PlaneClass(e1, c), PlaneClass(e - e1, tuple(x - y for x, y in zip(a, c)))


def wdvv_sum(beta: PlaneClass, A: PlaneClass, B: PlaneClass, count) -> int:
    """Right-hand side of the associativity relation for ``beta``.

    ``count`` maps a class (in the slot space of ``beta``) to its value.
    Coefficients are computed first; ``count`` is only called on terms with
    a nonzero coefficient.
    """
    n = point_conditions(beta)
    total = 0
    for b1, b2 in _splittings(beta):
        pair = b1.dot(b2)
        if pair == 0:
            continue
        n1 = point_conditions(b1)
        a1 = A.dot(b1)
        coef = pair * a1 * (B.dot(b2) * binom(n - 3, n1 - 1) - B.dot(b1) * binom(n - 3, n1))
        if coef == 0:
            continue
        v1 = count(b1)
        if v1 == 0:
            continue
        v2 = count(b2)
        if v2:
            total += coef * v1 * v2
    return total


class GWEngine:
    """Memoized evaluator; ``divisors`` picks ``(A, B)`` for a reduced class.

    The memo is guarded by a re-entrant lock, so one engine may be shared
    between threads.
    """

    def __init__(self, divisors=None):
        self._divisors = divisors or (lambda c: (H, H))
        self._memo: dict[PlaneClass, int] = {}
        self._lock = threading.RLock()

    def count(self, c: PlaneClass) -> int:
        """Count for any class: exceptional, negative or not yet reduced."""
        if c.e <= 0:
            return 1 if c.is_exceptional() else 0
        if any(x < 0 for x in c.a):
            return 0
        return self.gw_count(reduce(c))

    def gw_count(self, c: PlaneClass) -> int:
        if not _is_reduced(c):
            raise ValueError(f"gw_count expects a canonical reduced class, got {c}")
        with self._lock:
            hit = self._memo.get(c)
            if hit is None:
                hit = self._memo[c] = self._evaluate(c)
            return hit

    def _evaluate(self, c: PlaneClass) -> int:
        if c.e <= 0:
            return 1 if c.is_exceptional() else 0
        kdeg = c.anticanonical_degree
        if c.genus < 0 or kdeg <= 0:
            return 0
        if c.genus == 0 and kdeg == 1:
            return 1
        if c == UNREACHABLE:
            raise UnknownXError(c)
        if point_conditions(c) < 3:
            return self._lower(c)
        A, B = self._divisors(c)
        ab = A.dot(B)
        if ab == 0:
            raise ValueError("divisor pair must have nonzero intersection")
        total = wdvv_sum(c, A, B, self.count)
        if total % ab:
            raise ArithmeticError(f"non-integral value for {c}")
        return total // ab

    def _lower(self, c: PlaneClass) -> int:
        if c == H:
            return 1
        top = PlaneClass(c.e, c.padded(3))
        img = cremona(top, 0, 1, 2)
        if img.e >= c.e:
            raise ArithmeticError(f"{c} has too few point conditions and no lowering move")
        return self.count(img)


_DEFAULT = GWEngine()


def gw_count(c: PlaneClass) -> int:
    """Number of rational curves in class ``c`` through general points.

    ``c`` must be canonical and reduced (see :func:`reduce`, or the
    exceptional unit ``(0; -1)``).
    """
    return _DEFAULT.gw_count(c)


def count(c: PlaneClass) -> int:
    """Like :func:`gw_count` but accepts any class."""
    return _DEFAULT.count(c)
