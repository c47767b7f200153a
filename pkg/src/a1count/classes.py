"""Divisor classes on blow-ups of the projective plane.

A class ``e*H - sum(a_i * E_i)`` is stored as :class:`PlaneClass`.  The
exceptional curve ``E_i`` itself is written with ``e = 0`` and a single
``-1`` multiplicity, so decompositions in the rational-curve recursion stay
uniform.

:class:`TangencyKey` indexes the affine-line counts ``n(e; (a_i); (b_j))``:
``a`` are multiplicities at general points of the cubic, ``b`` are contact
orders at the distinguished point and its infinitely near points.  The
divisor behind a key is ``e*H - sum a_i E_i - sum_k (b_1 + ... + b_k) F_k``;
only its degree and genus are ever needed here.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations

__all__ = [
    "PlaneClass",
    "TangencyKey",
    "cremona",
    "minimize",
    "log_degree",
    "genus",
    "enumerate_y_classes",
    "line_classes",
    "tri",
]


def tri(m: int) -> int:
    """Return ``m(m-1)/2``, the genus drop of an ordinary ``m``-fold point."""
    return m * (m - 1) // 2


@dataclass(frozen=True)
class PlaneClass:
    """The class ``e*H - sum(a_i E_i)``; ``a`` is kept exactly as given."""

    e: int
    a: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(int(x) for x in self.a))

    @classmethod
    def exceptional(cls) -> "PlaneClass":
        return cls(0, (-1,))

    def canonical(self) -> "PlaneClass":
        """Multiplicities sorted descending with zeros dropped."""
        return PlaneClass(self.e, tuple(sorted((x for x in self.a if x != 0), reverse=True)))

    def is_canonical(self) -> bool:
        return self == self.canonical()

    def is_exceptional(self) -> bool:
        return self.e == 0 and self.canonical().a == (-1,)

    def padded(self, n: int) -> tuple[int, ...]:
        return self.a + (0,) * max(0, n - len(self.a))

    def dot(self, other: "PlaneClass") -> int:
        """Intersection pairing; the shorter multiplicity vector is zero-padded."""
        n = max(len(self.a), len(other.a))
        return self.e * other.e - sum(x * y for x, y in zip(self.padded(n), other.padded(n)))

    @property
    def anticanonical_degree(self) -> int:
        return 3 * self.e - sum(self.a)

    @property
    def genus(self) -> int:
        """Arithmetic genus ``(e-1)(e-2)/2 - sum a_i(a_i-1)/2``."""
        return tri(self.e - 1) - sum(tri(x) for x in self.a)

    def __str__(self):
        return f"({self.e};{','.join(map(str, self.a))})"


def cremona(c: PlaneClass, i: int, j: int, k: int) -> PlaneClass:
    """Quadratic transformation centred at slots ``i, j, k`` (zero-padded).

    >>> cremona(PlaneClass(1, ()), 0, 1, 2)
    PlaneClass(e=2, a=(1, 1, 1))
    """
    if len({i, j, k}) != 3:
        raise ValueError("cremona needs three distinct slots")
    a = list(c.padded(max(i, j, k) + 1))
    ai, aj, ak = a[i], a[j], a[k]
    a[i] = c.e - aj - ak
    a[j] = c.e - ai - ak
    a[k] = c.e - ai - aj
    return PlaneClass(2 * c.e - ai - aj - ak, tuple(a))


def minimize(c: PlaneClass) -> PlaneClass:
    """Lower the degree by Cremona moves on the three largest multiplicities.

    Stops as soon as a move would not strictly decrease ``e``, would leave
    ``e < 1`` or would create a negative multiplicity; the result is canonical.
    """
    if c.e < 1 or any(x < 0 for x in c.a):
        raise ValueError(f"minimize expects e >= 1 and a_i >= 0, got {c}")
    cur = c.canonical()
    while True:
        top = PlaneClass(cur.e, cur.padded(3))
        nxt = cremona(top, 0, 1, 2)
        if not (1 <= nxt.e < cur.e) or min(nxt.a) < 0:
            return cur
        cur = nxt.canonical()


def line_classes(n: int = 6) -> list[PlaneClass]:
    """The (-1)-curves on the blow-up at six points: E_i, H-E_i-E_j, 2H-(five E)."""
    out = []
    for i in range(n):
        a = [0] * n
        a[i] = -1
        out.append(PlaneClass(0, tuple(a)))
    for i, j in combinations(range(n), 2):
        a = [0] * n
        a[i] = a[j] = 1
        out.append(PlaneClass(1, tuple(a)))
    if n >= 5:
        for omit in range(n):
            out.append(PlaneClass(2, tuple(0 if s == omit else 1 for s in range(n))))
    return out


_LINES6 = line_classes(6)


def _meets_lines_nonnegatively(e: int, a: tuple[int, ...]) -> bool:
    c = PlaneClass(e, a)
    for line in _LINES6:
        if c.dot(line) < 0 and c != line:
            return False
    return True


def enumerate_y_classes(d: int) -> list[PlaneClass]:
    """Candidate classes on the cubic surface for curves of plane degree ``d``.

    Returns one representative per multiset (sorted descending, six slots,
    zeros kept): ``0 <= a_i <= d``, ``3e = d + sum(a)``, genus >= 0, and
    nonnegative intersection with every line other than the class itself.
    """
    out = []

    def rec(prefix, mx):
        if len(prefix) == 6:
            s = d + sum(prefix)
            if s % 3:
                return
            e = s // 3
            a = tuple(prefix)
            if PlaneClass(e, a).genus >= 0 and _meets_lines_nonnegatively(e, a):
                out.append(PlaneClass(e, a))
            return
        for x in range(mx, -1, -1):
            rec(prefix + [x], x)

    rec([], d)
    out.sort(key=lambda c: (c.e, tuple(sorted(c.a))))
    return out


_KEY_RE = re.compile(r"^\s*(-?\d+)\s*;([^;]*);([^;]*)$")


def _parse_seq(s: str) -> tuple[int, ...]:
    s = s.strip()
    if not s:
        return ()
    out: list[int] = []
    for t in s.split(","):
        base, _, rep = t.partition("^")
        out.extend([int(base)] * (int(rep) if rep else 1))
    return tuple(out)


@dataclass(frozen=True, order=True)
class TangencyKey:
    """Index ``(e; a; b)`` of an affine-line count; ``a`` is a sorted multiset."""

    e: int
    a: tuple[int, ...] = ()
    b: tuple[int, ...] = ()

    def __post_init__(self):
        a = tuple(sorted((int(x) for x in self.a), reverse=True))
        if any(x <= 0 for x in a) or any(int(x) <= 0 for x in self.b):
            raise ValueError(f"key entries must be positive: {self.a} / {self.b}")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", tuple(int(x) for x in self.b))

    @classmethod
    def parse(cls, text: str) -> "TangencyKey":
        """Parse ``e;a1,a2,...;b1,...``; empty segments are allowed (``4;;3``).

        Repeated entries may be written with an exponent, as in ``6;2^5,1;``.
        """
        m = _KEY_RE.match(text)
        if not m:
            raise ValueError(f"malformed key {text!r}")
        return cls(int(m.group(1)), _parse_seq(m.group(2)), _parse_seq(m.group(3)))

    def __str__(self):
        return f"{self.e};{','.join(map(str, self.a))};{','.join(map(str, self.b))}"

    def pretty(self) -> str:
        """Exponent notation, e.g. ``n(6;2^5,1;)``."""
        def grp(seq):
            parts, i = [], 0
            while i < len(seq):
                j = i
                while j < len(seq) and seq[j] == seq[i]:
                    j += 1
                parts.append(str(seq[i]) if j - i == 1 else f"{seq[i]}^{j - i}")
                i = j
            return ",".join(parts)
        return f"n({self.e};{grp(self.a)};{grp(self.b)})"

    @property
    def sort_key(self):
        return (log_degree(self), self.e, self.a, self.b)

    def plane_class(self) -> PlaneClass:
        return PlaneClass(self.e, self.a)

    def normalize(self) -> "TangencyKey":
        """Drop trailing contact orders 1 while the shorter key has degree >= 1."""
        k = self
        while k.b and k.b[-1] == 1:
            shorter = TangencyKey(k.e, k.a, k.b[:-1])
            if log_degree(shorter) < 1:
                break
            k = shorter
        return k

    def vanishes(self) -> bool:
        """Count is zero: negative log degree or negative genus."""
        return log_degree(self) < 0 or genus(self) < 0


def log_degree(k: TangencyKey) -> int:
    """``3e - sum(a) - sum(b)``."""
    return 3 * k.e - sum(k.a) - sum(k.b)


def genus(k: TangencyKey) -> int:
    """Genus with contact orders counted as infinitely near multiplicities."""
    return tri(k.e - 1) - sum(tri(x) for x in k.a) - sum(tri(x) for x in k.b)
