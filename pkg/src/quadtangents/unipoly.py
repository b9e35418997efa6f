"""Dense univariate polynomials over exact scalars, plus binary forms.

UniPoly is the workhorse for discriminants, resultants and certified real
root isolation (Sturm sequences).  BinaryForm wraps a homogeneous pair
(w, x) of fixed formal degree so that roots "at infinity" keep their
multiplicity through every computation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .scalars import (Scalar, abs_lower, abs_upper, as_rational, ext,
                      field_of, is_rational, rational_sqrt, scalar_sign,
                      scalar_sqrt)

_ZERO = Fraction(0)
_ONE = Fraction(1)


class UniPoly:
    """Polynomial in one variable; c[i] is the coefficient of X**i."""

    __slots__ = ("c",)

    def __init__(self, coeffs: Sequence[Scalar] = ()):
        cs = list(coeffs)
        while cs and scalar_sign(cs[-1]) == 0 and cs[-1] == 0:
            cs.pop()
        self.c = tuple(cs)

    # -- constructors ---------------------------------------------------

    @staticmethod
    def zero() -> "UniPoly":
        return UniPoly()

    @staticmethod
    def const(v) -> "UniPoly":
        return UniPoly([v])

    @staticmethod
    def x() -> "UniPoly":
        return UniPoly([_ZERO, _ONE])

    @staticmethod
    def linear_root(r) -> "UniPoly":
        """x - r"""
        return UniPoly([-r, _ONE])

    # -- basic queries ----------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; -1 is the sentinel for the zero polynomial."""
        return len(self.c) - 1

    def is_zero(self) -> bool:
        return not self.c

    def lc(self) -> Scalar:
        if not self.c:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.c[-1]

    def coeff(self, i: int) -> Scalar:
        return self.c[i] if 0 <= i < len(self.c) else _ZERO

    def __call__(self, v):
        r: Scalar = _ZERO
        for a in reversed(self.c):
            r = r * v + a
        return r

    # -- ring operations --------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, UniPoly):
            return NotImplemented
        n = max(len(self.c), len(other.c))
        return UniPoly([self.coeff(i) + other.coeff(i) for i in range(n)])

    def __sub__(self, other):
        if not isinstance(other, UniPoly):
            return NotImplemented
        n = max(len(self.c), len(other.c))
        return UniPoly([self.coeff(i) - other.coeff(i) for i in range(n)])

    def __neg__(self):
        return UniPoly([-a for a in self.c])

    def __mul__(self, other):
        if isinstance(other, UniPoly):
            if not self.c or not other.c:
                return UniPoly()
            out = [_ZERO] * (len(self.c) + len(other.c) - 1)
            for i, a in enumerate(self.c):
                if a == 0:
                    continue
                for j, b in enumerate(other.c):
                    out[i + j] = out[i + j] + a * b
            return UniPoly(out)
        return UniPoly([a * other for a in self.c])

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, UniPoly) and self.c == other.c

    def __hash__(self):
        return hash(self.c)

    def __repr__(self):
        return f"UniPoly({list(self.c)})"

    def shift(self, k: int) -> "UniPoly":
        """Multiply by X**k."""
        if not self.c:
            return self
        return UniPoly([_ZERO] * k + list(self.c))

    def divmod(self, other: "UniPoly") -> Tuple["UniPoly", "UniPoly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        q = [_ZERO] * max(0, self.degree - other.degree + 1)
        r = list(self.c)
        dlc = other.lc()
        do = other.degree
        while len(r) - 1 >= do and r:
            k = len(r) - 1 - do
            f = r[-1] / dlc
            q[k] = f
            for i, b in enumerate(other.c):
                r[k + i] = r[k + i] - f * b
            while r and r[-1] == 0:
                r.pop()
        return UniPoly(q), UniPoly(r)

    def __mod__(self, other):
        return self.divmod(other)[1]

    def exact_div(self, other: "UniPoly") -> "UniPoly":
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ValueError("inexact polynomial division")
        return q

    def derivative(self) -> "UniPoly":
        return UniPoly([i * a for i, a in enumerate(self.c)][1:])

    def monic(self) -> "UniPoly":
        if self.is_zero():
            return self
        l = self.lc()
        return UniPoly([a / l for a in self.c])

    def gcd(self, other: "UniPoly") -> "UniPoly":
        """Monic gcd over the coefficient field."""
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic() if not a.is_zero() else a

    def squarefree_part(self) -> "UniPoly":
        if self.degree <= 0:
            return self.monic()
        g = self.gcd(self.derivative())
        if g.degree <= 0:
            return self.monic()
        return self.exact_div(g).monic()

    def squarefree_decomposition(self) -> List[Tuple["UniPoly", int]]:
        """Yun's algorithm: list of (monic squarefree factor, multiplicity)."""
        p = self.monic()
        if p.degree <= 0:
            return []
        out: List[Tuple[UniPoly, int]] = []
        g = p.gcd(p.derivative())
        w = p.exact_div(g)
        i = 1
        while w.degree > 0:
            y = w.gcd(g)
            f = w.exact_div(y)
            if f.degree > 0:
                out.append((f.monic(), i))
            w, g = y, g.exact_div(y)
            i += 1
        return out

    def compose_linear(self, a, b) -> "UniPoly":
        """p(a*X + b)"""
        res = UniPoly()
        lin = UniPoly([b, a])
        for co in reversed(self.c):
            res = res * lin + UniPoly.const(co)
        return res

    def clear_denominators(self) -> "UniPoly":
        """Integer-primitive associate (rational coefficients only)."""
        if self.is_zero():
            return self
        import math
        den = 1
        for a in self.c:
            den = den * as_rational(a).denominator // math.gcd(
                den, as_rational(a).denominator)
        ints = [int(as_rational(a) * den) for a in self.c]
        g = 0
        for v in ints:
            g = math.gcd(g, v)
        if g > 1:
            ints = [v // g for v in ints]
        if ints[-1] < 0:
            ints = [-v for v in ints]
        return UniPoly([Fraction(v) for v in ints])


# ---------------------------------------------------------------------------
# Real root isolation (Sturm)
# ---------------------------------------------------------------------------


def sturm_chain(p: UniPoly) -> List[UniPoly]:
    chain = [p, p.derivative()]
    while not chain[-1].is_zero() and chain[-1].degree > 0:
        chain.append(-(chain[-2] % chain[-1]))
    if chain[-1].is_zero():
        chain.pop()
    return chain


def _variations(chain: List[UniPoly], t: Fraction) -> int:
    signs = []
    for q in chain:
        s = scalar_sign(q(t))
        if s != 0:
            signs.append(s)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def root_bound(p: UniPoly) -> Fraction:
    """Cauchy bound: all real roots lie in (-B, B)."""
    lo = abs_lower(p.lc())
    m = max((abs_upper(a) for a in p.c[:-1]), default=_ZERO)
    return 1 + m / lo


@dataclass(frozen=True)
class RootInterval:
    """Isolating interval for one real root; lo == hi marks an exact root."""
    lo: Fraction
    hi: Fraction

    @property
    def exact(self) -> bool:
        return self.lo == self.hi

    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def width(self) -> Fraction:
        return self.hi - self.lo


def isolate_real_roots(p: UniPoly) -> List[RootInterval]:
    """Disjoint rational intervals, one distinct real root in each.

    The squarefree part is taken internally, so multiplicities do not
    affect the count.  Intervals are half-open (lo, hi] conceptually; an
    exact rational root r is returned as the degenerate interval [r, r].
    """
    if p.is_zero():
        raise ValueError("cannot isolate roots of the zero polynomial")
    q = p.squarefree_part()
    if q.degree <= 0:
        return []
    chain = sturm_chain(q)
    B = root_bound(q)
    out: List[RootInterval] = []

    def emit(lo: Fraction, hi: Fraction):
        if scalar_sign(q(hi)) == 0:
            out.append(RootInterval(hi, hi))
        else:
            out.append(RootInterval(lo, hi))

    def split(lo: Fraction, hi: Fraction, n: int):
        if n == 0:
            return
        if n == 1:
            emit(lo, hi)
            return
        mid = (lo + hi) / 2
        vm = _variations(chain, mid)
        nl = _variations(chain, lo) - vm
        split(lo, mid, nl)
        split(mid, hi, n - nl)

    total = _variations(chain, -B) - _variations(chain, B)
    split(-B, B, total)
    out.sort(key=lambda r: (r.lo, r.hi))
    return out


def refine_interval(p: UniPoly, iv: RootInterval, width: Fraction) -> RootInterval:
    """Bisect an isolating interval of squarefree p below the given width."""
    if iv.exact:
        return iv
    q = p.squarefree_part()
    lo, hi = iv.lo, iv.hi
    if scalar_sign(q(hi)) == 0:
        return RootInterval(hi, hi)
    slo = scalar_sign(q(lo))
    while hi - lo > width:
        mid = (lo + hi) / 2
        sm = scalar_sign(q(mid))
        if sm == 0:
            return RootInterval(mid, mid)
        if sm == slo:
            lo = mid
        else:
            hi = mid
    return RootInterval(lo, hi)


def count_real_roots(p: UniPoly) -> int:
    return len(isolate_real_roots(p))


# ---------------------------------------------------------------------------
# Rational roots and low-degree factorization over Q
# ---------------------------------------------------------------------------


def simplest_rational_between(lo: Fraction, hi: Fraction) -> Fraction:
    """The unique rational with smallest denominator in [lo, hi]."""
    if lo > hi:
        raise ValueError("empty interval")
    if lo <= 0 <= hi:
        return Fraction(0)
    if hi < 0:
        return -simplest_rational_between(-hi, -lo)
    fl = lo.numerator // lo.denominator
    if fl == hi.numerator // hi.denominator and lo.denominator != 1:
        frac = simplest_rational_between(
            1 / (hi - fl), 1 / (lo - fl)) if lo != fl else Fraction(0)
        return fl + (1 / frac if frac != 0 else Fraction(0))
    return Fraction(fl if lo == fl else fl + 1)


def rational_roots(p: UniPoly) -> List[Fraction]:
    """All rational roots (without multiplicity), exact and complete."""
    if p.is_zero():
        raise ValueError("zero polynomial")
    for a in p.c:
        if not is_rational(a):
            raise TypeError("rational_roots needs rational coefficients")
    q = p.squarefree_part().clear_denominators()
    if q.degree <= 0:
        return []
    roots: List[Fraction] = []
    dmax = abs(int(q.lc()))
    gap = Fraction(1, 2 * dmax * dmax)
    for iv in isolate_real_roots(q):
        if iv.exact:
            roots.append(iv.lo)
            continue
        r = refine_interval(q, iv, gap)
        if r.exact:
            roots.append(r.lo)
            continue
        cand = simplest_rational_between(r.lo, r.hi)
        if cand.denominator <= dmax and q(cand) == 0:
            roots.append(cand)
    return sorted(roots)


def _quartic_quadratic_split(q: UniPoly) -> Optional[Tuple[UniPoly, UniPoly]]:
    """Split a monic rational quartic with no rational roots into two
    monic rational quadratics, if possible."""
    b, c, d, e = (q.coeff(3), q.coeff(2), q.coeff(1), q.coeff(0))
    # depress: x -> x - b/4
    sh = -b / 4
    dep = q.compose_linear(_ONE, sh)
    p2, p1, p0 = dep.coeff(2), dep.coeff(1), dep.coeff(0)
    # (x^2+ux+v)(x^2-ux+w): u^6 + 2p u^4 + (p^2-4r)u^2 - q^2 = 0
    cubic = UniPoly([-p1 * p1, p2 * p2 - 4 * p0, 2 * p2, _ONE])
    for U in rational_roots(cubic):
        if U < 0:
            continue
        u = rational_sqrt(U)
        if u is None:
            continue
        if u == 0:
            # biquadratic: x^4 + p x^2 + r = (x^2+v)(x^2+w)
            disc = p2 * p2 - 4 * p0
            s = rational_sqrt(disc)
            if s is None:
                continue
            v, w = (p2 - s) / 2, (p2 + s) / 2
            f1 = UniPoly([v, _ZERO, _ONE])
            f2 = UniPoly([w, _ZERO, _ONE])
        else:
            w_ = (p2 + U + p1 / u) / 2
            v_ = (p2 + U - p1 / u) / 2
            f1 = UniPoly([v_, u, _ONE])
            f2 = UniPoly([w_, -u, _ONE])
        f1 = f1.compose_linear(_ONE, -sh)
        f2 = f2.compose_linear(_ONE, -sh)
        if (f1 * f2) == q.monic():
            return f1, f2
    return None


def factor_low_degree(p: UniPoly) -> List[Tuple[UniPoly, int]]:
    """Factor a rational polynomial into monic irreducibles over Q.

    Complete for squarefree parts of degree <= 4; squarefree factors of
    higher degree are split off their rational roots and the remainder is
    returned unfactored (callers treat it as 'degree > 2 extension').
    """
    out: List[Tuple[UniPoly, int]] = []
    for sqf, mult in p.squarefree_decomposition():
        rest = sqf
        for r in rational_roots(sqf):
            rest = rest.exact_div(UniPoly.linear_root(r))
            out.append((UniPoly.linear_root(r), mult))
        if rest.degree == 0:
            continue
        if rest.degree in (2, 3):
            out.append((rest.monic(), mult))
        elif rest.degree == 4:
            split = _quartic_quadratic_split(rest.monic())
            if split is None:
                out.append((rest.monic(), mult))
            else:
                out.append((split[0], mult))
                out.append((split[1], mult))
        elif rest.degree > 4:
            out.append((rest.monic(), mult))
    out.sort(key=lambda fm: (fm[0].degree, [str(a) for a in fm[0].c]))
    return out


def square_root_of_poly(q: UniPoly) -> Optional[UniPoly]:
    """p with p*p == q, if q is a perfect square over its field, else None."""
    if q.is_zero():
        return UniPoly.zero()
    n = q.degree
    if n % 2:
        return None
    m = n // 2
    d = field_of(q.lc())
    lead = scalar_sqrt(q.lc(), d)
    if lead is None:
        return None
    p = [_ZERO] * (m + 1)
    p[m] = lead
    for k in range(m - 1, -1, -1):
        # coefficient of X^(m+k) in p^2: only the (k, m) pair involves p[k]
        s: Scalar = _ZERO
        for i in range(k + 1, m + 1):
            j = m + k - i
            if j <= k or j > m or j > i:
                continue
            s = s + (p[i] * p[j] if i == j else 2 * p[i] * p[j])
        p[k] = (q.coeff(m + k) - s) / (2 * lead)
    cand = UniPoly(p)
    if cand * cand == q:
        return cand
    return None


# ---------------------------------------------------------------------------
# Binary forms: homogeneous pairs (w, x) of fixed formal degree
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class P1Point:
    """Exact point [w, x] of the projective line."""
    w: Scalar
    x: Scalar

    def __post_init__(self):
        if self.w == 0 and self.x == 0:
            raise ValueError("not a projective point")

    def same_as(self, other: "P1Point") -> bool:
        return self.w * other.x - self.x * other.w == 0

    def key(self):
        # deterministic sort key: finite points by value, [0,1] last
        if self.w == 0:
            return (1, _ZERO)
        return (0, self.x / self.w)


@dataclass(frozen=True)
class P1RootIso:
    """Real root of an irreducible rational polynomial, isolated."""
    minpoly: UniPoly
    interval: RootInterval

    def approx(self) -> float:
        return float(self.interval.midpoint())


class BinaryForm:
    """Homogeneous form in (w, x) of fixed formal degree n.

    coeffs[k] is the coefficient of x**k * w**(n-k), so trailing zero
    coefficients encode roots at [w, x] = [0, 1].
    """

    __slots__ = ("n", "a")

    def __init__(self, n: int, coeffs: Sequence[Scalar]):
        if len(coeffs) != n + 1:
            raise ValueError("binary form needs n+1 coefficients")
        self.n = n
        self.a = tuple(coeffs)

    def is_zero(self) -> bool:
        return all(v == 0 for v in self.a)

    def __eq__(self, other):
        return (isinstance(other, BinaryForm) and self.n == other.n
                and self.a == other.a)

    def __hash__(self):
        return hash((self.n, self.a))

    def __repr__(self):
        return f"BinaryForm({self.n}, {list(self.a)})"

    def __call__(self, w, x):
        r: Scalar = _ZERO
        for k, c in enumerate(self.a):
            if c != 0:
                r = r + c * x ** k * w ** (self.n - k)
        return r

    def at_point(self, p: P1Point):
        return self(p.w, p.x)

    def __mul__(self, other):
        if isinstance(other, BinaryForm):
            out = [_ZERO] * (self.n + other.n + 1)
            for i, a in enumerate(self.a):
                if a == 0:
                    continue
                for j, b in enumerate(other.a):
                    out[i + j] = out[i + j] + a * b
            return BinaryForm(self.n + other.n, out)
        return BinaryForm(self.n, [a * other for a in self.a])

    __rmul__ = __mul__

    def __add__(self, other):
        if not isinstance(other, BinaryForm) or self.n != other.n:
            return NotImplemented
        return BinaryForm(self.n, [a + b for a, b in zip(self.a, other.a)])

    def __sub__(self, other):
        if not isinstance(other, BinaryForm) or self.n != other.n:
            return NotImplemented
        return BinaryForm(self.n, [a - b for a, b in zip(self.a, other.a)])

    def __neg__(self):
        return BinaryForm(self.n, [-a for a in self.a])

    def x_poly(self) -> UniPoly:
        """Chart w = 1."""
        return UniPoly(self.a)

    def mult_at_infinity(self) -> int:
        """Multiplicity of the root [0, 1] (top x-coefficients vanishing)."""
        if self.is_zero():
            raise ValueError("zero form")
        m = 0
        for c in reversed(self.a):
            if c == 0:
                m += 1
            else:
                break
        return m

    @staticmethod
    def from_x_poly(p: UniPoly, n: int) -> "BinaryForm":
        if p.degree > n:
            raise ValueError("degree exceeds formal degree")
        return BinaryForm(n, [p.coeff(i) for i in range(n + 1)])

    def gcd(self, other: "BinaryForm") -> "BinaryForm":
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        m = min(self.mult_at_infinity(), other.mult_at_infinity())
        g = self.x_poly().gcd(other.x_poly())
        return BinaryForm.from_x_poly(g, g.degree + m)

    def derivative_w(self) -> "BinaryForm":
        out = [(self.n - k) * c for k, c in enumerate(self.a)][: self.n]
        return BinaryForm(self.n - 1, out)

    def derivative_x(self) -> "BinaryForm":
        out = [k * c for k, c in enumerate(self.a)][1:]
        return BinaryForm(self.n - 1, out)

    def is_squarefree(self) -> bool:
        """No repeated projective roots (infinity included)."""
        if self.is_zero():
            return False
        if self.mult_at_infinity() > 1:
            return False
        p = self.x_poly()
        return p.gcd(p.derivative()).degree <= 0

    def squarefree_decomposition(self) -> List[Tuple["BinaryForm", int]]:
        """(squarefree factor, multiplicity) pairs; infinity tracked via w."""
        out = []
        m = self.mult_at_infinity()
        p = self.x_poly()
        for f, mult in p.squarefree_decomposition():
            extra = 1 if mult == m else 0
            out.append((BinaryForm.from_x_poly(f, f.degree + extra), mult))
        if m and not any(mult == m for _, mult in p.squarefree_decomposition()):
            out.append((BinaryForm(1, [_ONE, _ZERO]), m))  # the form w... see note
        return out

    def roots(self) -> List[Tuple[object, int]]:
        """Projective roots over the quadratic closure.

        Returns (root, multiplicity) pairs where root is a P1Point for
        rational or single-square-root points, a P1RootIso for real roots
        needing a bigger extension, or an irreducible UniPoly marking a
        complex-conjugate pair (no real points).
        """
        if self.is_zero():
            raise ValueError("zero form has no root list")
        out: List[Tuple[object, int]] = []
        m = self.mult_at_infinity()
        if m:
            out.append((P1Point(_ZERO, _ONE), m))
        p = self.x_poly()
        if p.degree <= 0:
            return out
        for f, mult in factor_low_degree(p):
            if f.degree == 1:
                out.append((P1Point(_ONE, -f.coeff(0)), mult))
            elif f.degree == 2:
                disc = f.coeff(1) ** 2 - 4 * f.coeff(0)
                if scalar_sign(disc) < 0:
                    out.append((f, mult))  # complex pair
                else:
                    s = scalar_sqrt(disc)
                    if s is None:
                        d0 = _squarefree_kernel(disc)
                        s = scalar_sqrt(disc, d0)
                    for sgn in (1, -1):
                        r = (-f.coeff(1) + sgn * s) / 2
                        out.append((P1Point(_ONE, r), mult))
            else:
                for iv in isolate_real_roots(f):
                    out.append((P1RootIso(f, iv), mult))
                n_real = len(isolate_real_roots(f))
                n_cplx = (f.degree - n_real) // 2
                for _ in range(n_cplx):
                    out.append((f, mult))
        return out


def _squarefree_kernel(q) -> Fraction:
    """d > 0 squarefree-ish with q = d * (rational square); exact by trial
    division, adequate for the small discriminants arising here."""
    q = as_rational(q)
    if q <= 0:
        raise ValueError("needs a positive rational")
    n = q.numerator * q.denominator
    d = 1
    f = 2
    while f * f <= n:
        e = 0
        while n % f == 0:
            n //= f
            e += 1
        if e % 2:
            d *= f
        f += 1
    return Fraction(d * n)


def jacobian_covariant(f: BinaryForm, g: BinaryForm) -> BinaryForm:
    """(df/dw)(dg/dx) - (df/dx)(dg/dw); for two binary quadratics its roots
    are the common fixed points of the involution swapping each root pair."""
    return f.derivative_w() * g.derivative_x() - f.derivative_x() * g.derivative_w()


def quadratic_resultant(f: Tuple[Scalar, Scalar, Scalar],
                        g: Tuple[Scalar, Scalar, Scalar]) -> Scalar:
    """Resultant of a u^2+b u+c and d u^2+e u+f over any commutative ring."""
    a, b, c = f
    d, e, ff = g
    return (a * ff - c * d) ** 2 - (a * e - b * d) * (b * ff - c * e)
