"""Exact integer and rational arithmetic for square-root comparisons.

Every decision in this package reduces to integer arithmetic; floating
point is never consulted for anything but display.  The comparison shapes
supported here are exactly the ones the bound computations need:

    rational  p/q     vs  sqrt(n)             (rat_cmp_sqrt)
    radical   c1*sqrt(n1)  vs  c2*sqrt(n2)    (RadicalBound, rad_cmp)
    linear    p*sqrt(a*N)  vs  q*sqrt(b*N)+c  (sqrt_linear_cmp)

All three are decided by squaring with exact sign handling, so boundary
cases (perfect squares, exact ties) are resolved by integer identities.

Decimal rendering is display-only: round to nearest, ties away from zero,
at a fixed number of digits.  Values that are exactly representable in at
most that many decimal digits are printed minimally ("9.4", "3"); all
others keep the full digit count ("2.2780").  Rendered strings never feed
back into any computation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

Rat = Fraction

__all__ = [
    "Rat",
    "RadicalBound",
    "ceil_sqrt",
    "format_decimal",
    "is_square",
    "isqrt",
    "rad_cmp",
    "rat_cmp_sqrt",
    "sqrt_linear_cmp",
]


def isqrt(n: int) -> int:
    """Floor of sqrt(n): the unique s >= 0 with s*s <= n < (s+1)*(s+1).

    Rejects negative input.
    """
    if n < 0:
        raise ValueError(f"isqrt of negative integer {n}")
    return math.isqrt(n)


def ceil_sqrt(n: int) -> int:
    """Ceiling of sqrt(n): the smallest s >= 0 with s*s >= n."""
    if n < 0:
        raise ValueError(f"ceil_sqrt of negative integer {n}")
    s = math.isqrt(n)
    return s if s * s == n else s + 1


def is_square(n: int) -> bool:
    if n < 0:
        return False
    s = math.isqrt(n)
    return s * s == n


def rat_cmp_sqrt(r: Fraction, n: int) -> int:
    """Exact order of a non-negative rational r versus sqrt(n).

    Returns -1, 0 or +1.  Decided by comparing num^2 with n * den^2 in
    integers, so equality is detected exactly (iff n*den^2 == num^2).
    """
    if r < 0:
        raise ValueError(f"rat_cmp_sqrt requires r >= 0, got {r}")
    if n < 0:
        raise ValueError(f"rat_cmp_sqrt of negative radicand {n}")
    lhs = r.numerator * r.numerator
    rhs = n * r.denominator * r.denominator
    return (lhs > rhs) - (lhs < rhs)


def sqrt_linear_cmp(p: int, a: int, q: int, b: int, c: int, n: int) -> bool:
    """Decide exactly whether p*sqrt(a*n) >= q*sqrt(b*n) + c.

    All arguments positive.  Two-step squaring: with
    D = p^2*a*n - q^2*b*n - c^2, the inequality holds iff

        D >= 0   and   D^2 >= 4 q^2 c^2 b n.

    D < 0 decides "false" before the second squaring, which keeps the
    sign handling exact (both sides of the second squaring are then
    non-negative).
    """
    if min(p, a, q, b, c, n) < 1:
        raise ValueError("sqrt_linear_cmp requires positive arguments")
    d = p * p * a * n - q * q * b * n - c * c
    if d < 0:
        return False
    return d * d >= 4 * q * q * c * c * b * n


def _round_half_away(num: int, den: int) -> int:
    """round(num/den) with ties away from zero, den > 0."""
    if num >= 0:
        return (2 * num + den) // (2 * den)
    return -((-2 * num + den) // (2 * den))


def _digits_to_str(t: int, decimals: int) -> str:
    sign = "-" if t < 0 else ""
    s = str(abs(t)).rjust(decimals + 1, "0")
    if decimals == 0:
        return sign + s
    return f"{sign}{s[:-decimals]}.{s[-decimals:]}"


def _trim_exact(text: str) -> str:
    if "." in text:
        text = text.rstrip("0").rstrip(".")
    return text


def format_decimal(value: Fraction, decimals: int = 4, trim: bool = True) -> str:
    """Render an exact rational at a fixed digit count.

    Rounds to nearest with ties away from zero.  With trim=True a value
    that is exactly representable within `decimals` digits is printed
    minimally (47/5 -> "9.4", 3 -> "3"); non-terminating values keep all
    digits (4/3 -> "1.3333").
    """
    if decimals < 0:
        raise ValueError("decimals must be >= 0")
    value = Fraction(value)
    scale = 10**decimals
    t = _round_half_away(value.numerator * scale, value.denominator)
    text = _digits_to_str(t, decimals)
    if trim and Fraction(t, scale) == value:
        text = _trim_exact(text)
    return text


@dataclass(frozen=True, order=False)
class RadicalBound:
    """The real number coef * sqrt(radicand), held exactly.

    coef is a non-negative rational, radicand a non-negative integer.
    Two RadicalBounds compare exactly through coef^2 * radicand (a
    rational), which is order-faithful since both values are >= 0.
    Rationals compare against RadicalBounds the same way.
    """

    coef: Fraction
    radicand: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "coef", Fraction(self.coef))
        if self.coef < 0:
            raise ValueError(f"RadicalBound coefficient must be >= 0, got {self.coef}")
        if self.radicand < 0:
            raise ValueError(f"RadicalBound radicand must be >= 0, got {self.radicand}")

    def square(self) -> Fraction:
        """coef^2 * radicand, the comparison key."""
        return self.coef * self.coef * self.radicand

    def cmp(self, other: "RadicalBound | Fraction | int") -> int:
        """Exact order versus another RadicalBound or non-negative rational."""
        lhs = self.square()
        if isinstance(other, RadicalBound):
            rhs = other.square()
        else:
            other = Fraction(other)
            if other < 0:
                # self >= 0 > other
                return 1
            rhs = other * other
        return (lhs > rhs) - (lhs < rhs)

    def __lt__(self, other) -> bool:
        return self.cmp(other) < 0

    def __le__(self, other) -> bool:
        return self.cmp(other) <= 0

    def __gt__(self, other) -> bool:
        return self.cmp(other) > 0

    def __ge__(self, other) -> bool:
        return self.cmp(other) >= 0

    def __eq__(self, other) -> bool:
        if isinstance(other, (RadicalBound, Fraction, int)):
            return self.cmp(other) == 0
        return NotImplemented

    def __hash__(self) -> int:
        exact = self.exact_rational()
        if exact is not None:
            return hash(exact)  # consistent with equality against rationals
        return hash(("radical", self.square()))

    def exact_rational(self) -> Fraction | None:
        """The value as a Fraction when the radicand is a perfect square."""
        s = math.isqrt(self.radicand)
        if s * s == self.radicand:
            return self.coef * s
        return None

    def decimal(self, decimals: int = 4, trim: bool = True) -> str:
        """Rounded rendering (nearest, ties away from zero), exactly computed.

        With v = (p/q) * sqrt(rad) and k digits, the scaled floor
        round(v * 10^k) equals (isqrt(4 * p^2 * 10^(2k) * rad) + q) // (2q):
        the half-offset is folded into the integer square root, so no
        approximation of sqrt(rad) is ever taken.
        """
        if decimals < 0:
            raise ValueError("decimals must be >= 0")
        exact = self.exact_rational()
        if exact is not None:
            return format_decimal(exact, decimals, trim)
        p, q = self.coef.numerator, self.coef.denominator
        big = 4 * p * p * 10 ** (2 * decimals) * self.radicand
        t = (math.isqrt(big) + q) // (2 * q)
        # irrational value: never exactly representable, keep all digits
        return _digits_to_str(t, decimals)

    def __str__(self) -> str:
        return f"{self.coef}*sqrt({self.radicand})"


def rad_cmp(x: RadicalBound, y: RadicalBound) -> int:
    """Exact order of two RadicalBounds; -1, 0 or +1."""
    return x.cmp(y)
