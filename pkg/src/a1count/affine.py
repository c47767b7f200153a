"""Values ``c0 + c1*x`` for the one count the recursion cannot reach."""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

__all__ = ["AffineCount", "X"]

_TERM = re.compile(r"([+-]?)\s*(\d*)\s*(x?)")


@dataclass(frozen=True)
class AffineCount:
    """Exact element of ``Q + Q*x``; equality is componentwise."""

    c0: Fraction = Fraction(0)
    c1: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "c0", Fraction(self.c0))
        object.__setattr__(self, "c1", Fraction(self.c1))

    @classmethod
    def lift(cls, v) -> "AffineCount":
        if isinstance(v, AffineCount):
            return v
        if isinstance(v, (int, Rational)):
            return cls(Fraction(v), Fraction(0))
        raise TypeError(f"cannot lift {v!r}")

    @classmethod
    def parse(cls, text: str) -> "AffineCount":
        """Parse ``113``, ``-6342+81x``, ``2419-7x``, ``x-24`` or ``x``."""
        if re.search(r"[\dx]\s+[\dx]", text):
            raise ValueError(f"malformed value {text!r}")
        s = text.replace(" ", "")
        if not s:
            raise ValueError("empty value")
        c0 = c1 = 0
        pos = 0
        seen = False
        while pos < len(s):
            m = _TERM.match(s, pos)
            if not m or m.end() == pos or (not m.group(2) and not m.group(3)):
                raise ValueError(f"malformed value {text!r}")
            if seen and not m.group(1):
                raise ValueError(f"malformed value {text!r}")
            sign = -1 if m.group(1) == "-" else 1
            if m.group(3):
                c1 += sign * (int(m.group(2)) if m.group(2) else 1)
            else:
                c0 += sign * int(m.group(2))
            pos = m.end()
            seen = True
        return cls(c0, c1)

    def __add__(self, o):
        o = AffineCount.lift(o)
        return AffineCount(self.c0 + o.c0, self.c1 + o.c1)

    __radd__ = __add__

    def __neg__(self):
        return AffineCount(-self.c0, -self.c1)

    def __sub__(self, o):
        return self + (-AffineCount.lift(o))

    def __rsub__(self, o):
        return AffineCount.lift(o) - self

    def __mul__(self, k):
        if isinstance(k, AffineCount):
            if k.c1 and self.c1:
                raise ArithmeticError("product leaves degree <= 1")
            if not k.c1:
                k = k.c0
            else:
                return k * self.c0
        k = Fraction(k)
        return AffineCount(self.c0 * k, self.c1 * k)

    __rmul__ = __mul__

    def __truediv__(self, k):
        k = Fraction(k)
        return AffineCount(self.c0 / k, self.c1 / k)

    def __bool__(self):
        return bool(self.c0 or self.c1)

    def __eq__(self, o):
        if isinstance(o, (int, Rational)):
            o = AffineCount.lift(o)
        if not isinstance(o, AffineCount):
            return NotImplemented
        return self.c0 == o.c0 and self.c1 == o.c1

    def __hash__(self):
        return hash((self.c0, self.c1))

    @property
    def is_constant(self) -> bool:
        return self.c1 == 0

    @property
    def is_integral(self) -> bool:
        return self.c0.denominator == 1 and self.c1.denominator == 1

    def subs(self, x) -> Fraction:
        return self.c0 + self.c1 * Fraction(x)

    def __int__(self):
        if not self.is_constant or self.c0.denominator != 1:
            raise ValueError(f"{self} is not an integer")
        return int(self.c0)

    def __str__(self):
        if not self.c1:
            return str(self.c0)
        c1 = "" if self.c1 == 1 else "-" if self.c1 == -1 else str(self.c1)
        if not self.c0:
            return f"{c1}x"
        sign = "+" if self.c1 > 0 else "-"
        mag = abs(self.c1)
        return f"{self.c0}{sign}{'' if mag == 1 else mag}x"

    def fixture_text(self) -> str:
        """``c0+c1x`` / ``c0-c1x`` with both coefficients written out."""
        if self.c1 == 0:
            return str(self.c0)
        sign = "+" if self.c1 > 0 else "-"
        return f"{self.c0}{sign}{abs(self.c1)}x"

    def __repr__(self):
        return f"AffineCount({self})"


X = AffineCount(0, 1)
