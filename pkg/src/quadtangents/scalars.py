"""Exact scalar arithmetic: rationals and real quadratic extensions Q(sqrt(d)).

Every geometric predicate in this package is decided over these scalars;
floating point appears only when rendering reports.  A scalar is either a
``fractions.Fraction`` or a :class:`QuadExt` value ``x + y*sqrt(d)`` with
``y != 0``.  QuadExt results with a vanishing irrational part collapse back
to plain Fractions, so equality and hashing stay canonical.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Optional, Union

Scalar = Union[Fraction, "QuadExt"]


def as_rational(v) -> Fraction:
    """Coerce ints, Fractions and decimal/fraction strings to Fraction."""
    if isinstance(v, Fraction):
        return v
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, str):
        return Fraction(v)
    raise TypeError(f"not an exact rational: {v!r}")


def rational_sqrt(q: Fraction) -> Optional[Fraction]:
    """Exact square root of a rational, or None if irrational."""
    if q < 0:
        return None
    if q == 0:
        return Fraction(0)
    n, d = q.numerator, q.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def _check_discriminant(d: Fraction) -> Fraction:
    d = as_rational(d)
    if d == 0:
        raise ValueError("extension discriminant must be nonzero")
    if d > 0 and rational_sqrt(d) is not None:
        raise ValueError(f"discriminant {d} is a rational square")
    return d


class QuadExt:
    """Element x + y*sqrt(d) of the quadratic field Q(sqrt(d)).

    Invariants: y != 0 (rational values are plain Fractions) and d is a
    fixed rational non-square; d < 0 gives a complex quadratic field, on
    which ordering and signs are undefined.  Mixing two d's raises.
    """

    __slots__ = ("x", "y", "d")

    def __init__(self, x, y, d):
        object.__setattr__(self, "x", as_rational(x))
        object.__setattr__(self, "y", as_rational(y))
        object.__setattr__(self, "d", as_rational(d))
        if self.y == 0:
            raise ValueError("use ext() so rational values stay Fractions")

    def __setattr__(self, *a):
        raise AttributeError("QuadExt is immutable")

    # -- coercion -------------------------------------------------------

    def _parts(self, other):
        if isinstance(other, QuadExt):
            if other.d != self.d:
                raise TypeError(
                    f"mixed extension fields sqrt({self.d}) and sqrt({other.d})")
            return other.x, other.y
        if isinstance(other, (int, Fraction)):
            return as_rational(other), Fraction(0)
        return None

    # -- arithmetic -----------------------------------------------------

    def __add__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        return ext(self.x + p[0], self.y + p[1], self.d)

    __radd__ = __add__

    def __sub__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        return ext(self.x - p[0], self.y - p[1], self.d)

    def __rsub__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        return ext(p[0] - self.x, p[1] - self.y, self.d)

    def __mul__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        ox, oy = p
        return ext(self.x * ox + self.d * self.y * oy,
                   self.x * oy + self.y * ox, self.d)

    __rmul__ = __mul__

    def __truediv__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        ox, oy = p
        n = ox * ox - self.d * oy * oy
        if n == 0:
            raise ZeroDivisionError("division by zero scalar")
        # multiply by the conjugate of the divisor
        rx = (self.x * ox - self.d * self.y * oy) / n
        ry = (self.y * ox - self.x * oy) / n
        return ext(rx, ry, self.d)

    def __rtruediv__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        n = self.x * self.x - self.d * self.y * self.y
        if n == 0:
            raise ZeroDivisionError("division by zero scalar")
        ox, oy = p
        rx = (ox * self.x - self.d * oy * self.y) / n
        ry = (oy * self.x - ox * self.y) / n
        return ext(rx, ry, self.d)

    def __neg__(self):
        return QuadExt(-self.x, -self.y, self.d)

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        r: Scalar = Fraction(1)
        b: Scalar = self
        while n:
            if n & 1:
                r = r * b
            b = b * b
            n >>= 1
        return r

    # -- comparisons ----------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, QuadExt):
            return self.d == other.d and self.x == other.x and self.y == other.y
        return False  # y != 0, so never equal to a rational

    def __hash__(self):
        return hash((self.x, self.y, self.d))

    def __lt__(self, other):
        return scalar_sign(self - other) < 0

    def __le__(self, other):
        return scalar_sign(self - other) <= 0

    def __gt__(self, other):
        return scalar_sign(self - other) > 0

    def __ge__(self, other):
        return scalar_sign(self - other) >= 0

    def __float__(self):
        return float(self.x) + float(self.y) * math.sqrt(float(self.d))

    def __repr__(self):
        return f"({self.x} + {self.y}*sqrt({self.d}))"

    def __bool__(self):
        return True  # y != 0 implies nonzero

    def conjugate(self) -> "QuadExt":
        return QuadExt(self.x, -self.y, self.d)


def ext(x, y, d) -> Scalar:
    """Build x + y*sqrt(d), collapsing to a Fraction when y == 0."""
    y = as_rational(y)
    if y == 0:
        return as_rational(x)
    return QuadExt(x, y, _check_discriminant(d))


def is_rational(v: Scalar) -> bool:
    return isinstance(v, (int, Fraction))


def field_of(v: Scalar) -> Optional[Fraction]:
    """Discriminant of the extension a scalar lives in (None for Q)."""
    return v.d if isinstance(v, QuadExt) else None


def conjugate(v: Scalar) -> Scalar:
    return v.conjugate() if isinstance(v, QuadExt) else as_rational(v)


def is_real(v: Scalar) -> bool:
    return not isinstance(v, QuadExt) or v.d > 0


def scalar_sign(v: Scalar) -> int:
    """Exact sign of a real scalar: -1, 0 or +1."""
    if isinstance(v, (int, Fraction)):
        return (v > 0) - (v < 0)
    x, y, d = v.x, v.y, v.d
    if d < 0:
        raise TypeError("sign undefined in a complex quadratic field")
    if x == 0:
        return 1 if y > 0 else -1
    if y == 0:  # pragma: no cover - excluded by invariant
        return 1 if x > 0 else -1
    sx = 1 if x > 0 else -1
    sy = 1 if y > 0 else -1
    if sx == sy:
        return sx
    # opposite signs: compare x^2 against d*y^2 (sqrt(d) irrational, no tie)
    return sx if x * x > d * y * y else sy


def scalar_sqrt(v: Scalar, d=None) -> Optional[Scalar]:
    """Square root of v inside Q (or Q(sqrt(d)) when d is given), else None."""
    if isinstance(v, (int, Fraction)):
        q = as_rational(v)
        r = rational_sqrt(q)
        if r is not None:
            return r
        if d is not None:
            d = as_rational(d)
            s = rational_sqrt(q / d)
            if s is not None:
                return ext(0, s, d)
        return None
    # v = x + y*sqrt(d); look for (u + w*sqrt(d))^2 = v
    x, y, dd = v.x, v.y, v.d
    if dd < 0 or scalar_sign(v) < 0:
        return None
    n = rational_sqrt(x * x - dd * y * y)
    if n is None:
        return None
    for u2 in ((x + n) / 2, (x - n) / 2):
        u = rational_sqrt(u2)
        if u is not None and u != 0:
            w = y / (2 * u)
            cand = ext(u, w, dd)
            if cand * cand == v:
                return cand if scalar_sign(cand) >= 0 else -cand
    return None


def abs_upper(v: Scalar) -> Fraction:
    """A rational upper bound for |v| (modulus in the complex case)."""
    if isinstance(v, (int, Fraction)):
        return abs(as_rational(v))
    d = abs(v.d)
    ub = Fraction(math.isqrt(d.numerator * d.denominator) + 1, d.denominator)
    return abs(v.x) + abs(v.y) * ub


def abs_lower(v: Scalar) -> Fraction:
    """A positive rational lower bound for |v| (v must be nonzero)."""
    if isinstance(v, (int, Fraction)):
        a = abs(as_rational(v))
        if a == 0:
            raise ZeroDivisionError("abs_lower of zero")
        return a
    if v.d < 0:
        # |v|^2 = x^2 + |d| y^2 >= |d| y^2 with y != 0
        m2 = v.x * v.x - v.d * v.y * v.y
        u = abs_upper(v)
        return m2 / u
    # |v| * |conj(v)| = |norm(v)|
    n = abs(v.x * v.x - v.d * v.y * v.y)
    return n / abs_upper(v.conjugate())


def exact_str(v: Scalar) -> str:
    """Exact human-readable rendering, valid for complex scalars too."""
    if isinstance(v, (int, Fraction)):
        return str(as_rational(v))
    parts = []
    if v.x != 0:
        parts.append(str(v.x))
    y = v.y
    root = f"sqrt({v.d})"
    if y == 1:
        parts.append(root)
    elif y == -1:
        parts.append(f"-{root}")
    else:
        parts.append(f"{y}*{root}")
    out = parts[0]
    for p in parts[1:]:
        out += p if p.startswith("-") else "+" + p
    return out


def scalar_to_float(v: Scalar) -> float:
    return float(v)


def decimal_str(v: Scalar, digits: int = 12) -> str:
    """Deterministic decimal rendering with `digits` significant digits."""
    if not is_real(v):
        return exact_str(v)
    sign = scalar_sign(v)
    if sign == 0:
        return "0"
    if isinstance(v, (int, Fraction)):
        q = abs(as_rational(v))
    else:
        # scaled integer sqrt gives an exact-enough decimal for rendering
        q = None
    prefix = "-" if sign < 0 else ""
    if q is None:
        x, y, d = v.x, v.y, v.d
        scale = 10 ** (digits + 8)
        num = d.numerator * scale * scale // d.denominator
        root = Fraction(math.isqrt(num), scale)
        q = abs(x + y * root)
    # position of the leading digit
    e = 0
    while q >= 10:
        q /= 10
        e += 1
    while q < 1:
        q *= 10
        e -= 1
    scaled = q * Fraction(10) ** (digits - 1)
    n = int(scaled + Fraction(1, 2))
    s = str(n)
    if len(s) > digits:  # rounded up to the next power of ten
        s = s[:digits]
        e += 1
    point = e + 1
    if 0 < point <= digits:
        out = s[:point] + ("." + s[point:] if s[point:].strip("0") else "")
    elif point <= 0:
        out = "0." + "0" * (-point) + s.rstrip("0")
    else:
        out = s + "0" * (point - digits)
    out = out.rstrip(".") if "." in out else out
    return prefix + out
