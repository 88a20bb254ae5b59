"""Real root triples of monic cubics t^3 - a t^2 + b t - c.

(a, b, c) are the elementary symmetric values of the roots.  The shift
t = u + a/3 gives the depressed form u^3 + p u - q, and everything about the
real roots is decided by the exact sign of D = 4 p^3 + 27 q^2.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .exact_arith import Polynomial, as_rational, poly_shift, rational_nth_root
from .root_oracle import (
    Approx,
    Exact,
    IsolatingInterval,
    RootValue,
    bisect_refine,
    cauchy_bound,
    isolate_real_roots,
    refine_root,
    sign,
)

DEFAULT_TOL = Fraction(1, 10**12)


class InvariantViolation(AssertionError):
    """An internal identity failed; this indicates a bug, not bad input."""


@dataclass(frozen=True)
class Cubic:
    a: Fraction
    b: Fraction
    c: Fraction

    def __post_init__(self):
        for name in ("a", "b", "c"):
            object.__setattr__(self, name, as_rational(getattr(self, name)))

    def polynomial(self) -> Polynomial:
        return Polynomial([-self.c, self.b, -self.a, 1])


@dataclass(frozen=True)
class DepressedCubic:
    """u^3 + p u - q, with the original variable t = u + shift."""

    p: Fraction
    q: Fraction
    shift: Fraction = Fraction(0)

    def __post_init__(self):
        for name in ("p", "q", "shift"):
            object.__setattr__(self, name, as_rational(getattr(self, name)))

    def polynomial(self) -> Polynomial:
        return Polynomial([-self.q, self.p, 0, 1])


class Kind(enum.Enum):
    TRIPLE_ROOT = "TripleRoot"
    DOUBLE_AND_SINGLE = "DoubleAndSingle"
    THREE_DISTINCT = "ThreeDistinct"
    ONE_REAL_ROOT = "OneRealRoot"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class Classification:
    kind: Kind
    discriminant: Fraction

    @property
    def has_real_triple(self) -> bool:
        return self.kind is not Kind.ONE_REAL_ROOT


@dataclass(frozen=True)
class RootTriple:
    roots: tuple[RootValue, RootValue, RootValue]
    multiplicities: tuple[int, ...]
    classification: Classification

    @property
    def all_exact(self) -> bool:
        return all(isinstance(r, Exact) for r in self.roots)

    def values(self) -> list[Fraction]:
        """Exact values, or bracket midpoints for approximate roots."""
        return [r.value if isinstance(r, Exact) else r.midpoint for r in self.roots]


@dataclass(frozen=True)
class NoRealTriple:
    discriminant: Fraction


def vieta_expand(x, y, z) -> Cubic:
    x, y, z = as_rational(x), as_rational(y), as_rational(z)
    return Cubic(x + y + z, x * y + y * z + z * x, x * y * z)


def depress(cub: Cubic) -> DepressedCubic:
    a, b, c = cub.a, cub.b, cub.c
    dep = DepressedCubic(b - a * a / 3, c - a * b / 3 + 2 * a**3 / 27, a / 3)
    if poly_shift(cub.polynomial(), dep.shift) != dep.polynomial():
        raise InvariantViolation("shifted cubic does not match its depressed form")
    return dep


def discriminant_value(dep: DepressedCubic) -> Fraction:
    return 4 * dep.p**3 + 27 * dep.q**2


def sign_product_at_critical(dep: DepressedCubic) -> Fraction:
    """f(-m) * f(m) at the critical points +-m = +-sqrt(-p/3), with no radicals.

    f(+-m) = +-(2p/3) m - q, so the product is q^2 - (4p^2/9) m^2 = q^2 + 4p^3/27.
    """
    if dep.p >= 0:
        raise ValueError("critical points exist only for p < 0")
    value = dep.q**2 + 4 * dep.p**3 / 27
    if 27 * value != discriminant_value(dep):
        raise InvariantViolation("27 * critical product != discriminant")
    return value


def classify(cub: Cubic) -> Classification:
    dep = depress(cub)
    d = discriminant_value(dep)
    if dep.p == 0 and dep.q == 0:
        kind = Kind.TRIPLE_ROOT
    elif d == 0:
        # d == 0 with (p, q) != 0 forces p < 0.
        kind = Kind.DOUBLE_AND_SINGLE
    elif d < 0:
        kind = Kind.THREE_DISTINCT
    else:
        kind = Kind.ONE_REAL_ROOT
    return Classification(kind, d)


def _critical_separator(dep: DepressedCubic, iv: IsolatingInterval, want: int) -> Fraction:
    """A rational near a critical point where f has the sign ``want``.

    The critical value itself has that sign strictly, so bisecting the
    isolating interval of the critical point eventually lands on one.
    """
    f = dep.polynomial()
    crit = Polynomial([dep.p, 0, 3])
    lo, hi = iv.lo, iv.hi
    while True:
        mid = (lo + hi) / 2
        if sign(f(mid)) == want:
            return mid
        cm = crit(mid)
        if cm == 0:
            raise InvariantViolation("critical point is rational yet f has the wrong sign")
        if sign(cm) == sign(crit(lo)):
            lo = mid
        else:
            hi = mid


def _three_distinct(dep: DepressedCubic, tol: Fraction) -> list[RootValue]:
    f = dep.polynomial()
    bound = cauchy_bound(f)
    # f' = 3u^2 + p has roots -m < 0 < m; f(-m) > 0 > f(m) when D < 0.
    crit_ivs = isolate_real_roots(Polynomial([dep.p, 0, 3]))
    if len(crit_ivs) != 2:
        raise InvariantViolation("expected two critical points")
    r_minus = _critical_separator(dep, crit_ivs[0], +1)
    r_plus = _critical_separator(dep, crit_ivs[1], -1)
    # f > 0 left of zero only between the two smallest roots, and f < 0 right
    # of zero only between the two largest, so each bracket holds one root.
    if not r_minus < 0 < r_plus:
        raise InvariantViolation("critical separators on the wrong side of zero")
    brackets = [(-bound, r_minus), (r_minus, r_plus), (r_plus, bound)]
    roots = []
    for lo, hi in brackets:
        if not (sign(f(lo)) <= 0 <= sign(f(hi)) or sign(f(lo)) >= 0 >= sign(f(hi))):
            raise InvariantViolation(f"bracket [{lo}, {hi}] has no sign change")
        iv = IsolatingInterval(lo, hi)
        roots.append(refine_root(f, iv, tol))
    return roots


def solve_cubic(cub: Cubic, tol=DEFAULT_TOL) -> RootTriple | NoRealTriple:
    """Real x <= y <= z with the given symmetric values, or NoRealTriple if D > 0."""
    tol = as_rational(tol)
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    dep = depress(cub)
    cls = classify(cub)
    shift = dep.shift
    if cls.kind is Kind.ONE_REAL_ROOT:
        return NoRealTriple(cls.discriminant)
    if cls.kind is Kind.TRIPLE_ROOT:
        r = Exact(shift)
        return RootTriple((r, r, r), (3,), cls)
    if cls.kind is Kind.DOUBLE_AND_SINGLE:
        # (u + s m)^2 (u - 2 s m) = u^3 - 3 m^2 u - 2 s m^3, so m^3 = |q| / 2.
        m = rational_nth_root(abs(dep.q) / 2, 3)
        if m is None or m * m != -dep.p / 3:
            # Over Q, D = 0 forces m = 3|q| / (2|p|), so the cube is always rational.
            raise InvariantViolation("double root of a rational cubic must be rational")
        s = sign(dep.q)
        double, single = Exact(-s * m + shift), Exact(2 * s * m + shift)
        if double.value < single.value:
            return RootTriple((double, double, single), (2, 1), cls)
        return RootTriple((single, double, double), (1, 2), cls)
    roots = [r.shifted(shift) for r in _three_distinct(dep, tol)]
    return RootTriple(tuple(roots), (1, 1, 1), cls)


@dataclass(frozen=True)
class NoRealPair:
    discriminant: Fraction


def solve_quadratic_vieta(a, b, tol=DEFAULT_TOL):
    """Real x <= y with x + y = a and x y = b, or NoRealPair when 4b - a^2 > 0."""
    a, b, tol = as_rational(a), as_rational(b), as_rational(tol)
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    disc = a * a - 4 * b
    if disc < 0:
        return NoRealPair(4 * b - a * a)
    root = rational_nth_root(disc, 2)
    if root is not None:
        return Exact((a - root) / 2), Exact((a + root) / 2)
    # A sqrt bracket of width 2*tol gives root brackets of width tol.
    sq = bisect_refine(Polynomial([-disc, 0, 1]), IsolatingInterval(Fraction(0), disc + 1), 2 * tol)
    assert isinstance(sq, Approx)
    return Approx((a - sq.hi) / 2, (a - sq.lo) / 2), Approx((a + sq.lo) / 2, (a + sq.hi) / 2)
