"""Real-root machinery over Q: Sturm chains, isolation, bisection refinement.

Everything here is exact.  Approximate roots are still carried as exact
rational brackets; the decimal value is only a view of the bracket midpoint.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

from .exact_arith import (
    Polynomial,
    as_rational,
    format_rational,
    formal_derivative,
    poly_divmod,
    squarefree_decomposition,
    squarefree_part,
)


class Infinity(enum.Enum):
    NEG = "-inf"
    POS = "+inf"

    def __str__(self):
        return self.value


NEG_INF = Infinity.NEG
POS_INF = Infinity.POS


@dataclass(frozen=True)
class Exact:
    value: Fraction

    def __str__(self):
        return format_rational(self.value)

    def __float__(self):
        return float(self.value)

    def contains(self, x) -> bool:
        return as_rational(x) == self.value

    def shifted(self, s) -> Exact:
        return Exact(self.value + as_rational(s))


@dataclass(frozen=True)
class Approx:
    """A root known to lie in the closed rational bracket [lo, hi]."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if not self.lo < self.hi:
            raise ValueError("Approx bracket needs lo < hi")

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    @property
    def radius(self) -> Fraction:
        return (self.hi - self.lo) / 2

    @property
    def value(self) -> float:
        return float(self.midpoint)

    def __float__(self):
        return self.value

    def __str__(self):
        return f"~{self.value!r}"

    def contains(self, x) -> bool:
        return self.lo <= as_rational(x) <= self.hi

    def shifted(self, s) -> Approx:
        s = as_rational(s)
        return Approx(self.lo + s, self.hi + s)


RootValue = Exact | Approx


def root_lower(r: RootValue) -> Fraction:
    return r.value if isinstance(r, Exact) else r.lo


def root_upper(r: RootValue) -> Fraction:
    return r.value if isinstance(r, Exact) else r.hi


class RootOracleError(ArithmeticError):
    pass


class EndpointIsRootError(RootOracleError):
    pass


class RefinementFailed(RootOracleError):
    pass


@dataclass(frozen=True)
class IsolatingInterval:
    lo: Fraction
    hi: Fraction
    root_count: int = 1
    multiplicity: int = 1


def sign(x) -> int:
    return (x > 0) - (x < 0)


class SturmChain:
    """f, f', then negated remainders until the remainder vanishes."""

    def __init__(self, f: Polynomial):
        if f.is_zero():
            raise ValueError("Sturm chain of the zero polynomial")
        chain = [f, formal_derivative(f)]
        while chain[-1]:
            chain.append(-poly_divmod(chain[-2], chain[-1])[1])
        chain.pop()
        self.chain: tuple[Polynomial, ...] = tuple(chain)

    def __len__(self):
        return len(self.chain)

    def signs_at(self, x) -> list[int]:
        if x is NEG_INF:
            return [sign(p.leading) * (-1) ** int(p.degree) for p in self.chain]
        if x is POS_INF:
            return [sign(p.leading) for p in self.chain]
        x = _endpoint_value(x)
        return [sign(p(x)) for p in self.chain]

    def variations(self, x) -> int:
        nonzero = [s for s in self.signs_at(x) if s]
        return sum(1 for a, b in zip(nonzero, nonzero[1:]) if a != b)


def _endpoint_value(x) -> Fraction:
    if isinstance(x, Exact):
        return x.value
    return as_rational(x)


def cauchy_bound(f: Polynomial) -> Fraction:
    """1 + max |c_i| over the non-leading coefficients of a monic f."""
    if f.is_constant():
        raise ValueError("Cauchy bound needs degree >= 1")
    if f.leading != 1:
        raise ValueError("Cauchy bound expects a monic polynomial")
    return 1 + max((abs(c) for c in f.coefficients[:-1]), default=Fraction(0))


def sturm_count(f: Polynomial, lo=NEG_INF, hi=POS_INF, chain: SturmChain | None = None) -> int:
    """Number of distinct real roots of f in the open interval (lo, hi)."""
    if f.is_zero():
        raise ValueError("sturm_count of the zero polynomial")
    for x in (lo, hi):
        if not isinstance(x, Infinity) and f(_endpoint_value(x)) == 0:
            raise EndpointIsRootError(f"endpoint {x} is a root")
    if not isinstance(lo, Infinity) and not isinstance(hi, Infinity):
        if not _endpoint_value(lo) < _endpoint_value(hi):
            raise ValueError("sturm_count needs lo < hi")
    if lo is POS_INF or hi is NEG_INF:
        raise ValueError("sturm_count needs lo < hi")
    chain = chain or SturmChain(f)
    return chain.variations(lo) - chain.variations(hi)


def isolate_real_roots(f: Polynomial) -> list[IsolatingInterval]:
    """Disjoint rational intervals, one per distinct real root, sorted ascending.

    Multiplicities come from Yun's squarefree decomposition: the root in an
    interval has multiplicity i when the i-th factor has a root there.
    """
    if f.is_zero():
        raise ValueError("isolate_real_roots of the zero polynomial")
    if f.is_constant():
        return []
    g = squarefree_part(f)
    chain = SturmChain(g)
    bound = cauchy_bound(g)
    found: list[tuple[Fraction, Fraction]] = []
    # Depth-first over (lo, hi, count) with endpoints that are never roots of g.
    stack = [(-bound, bound, sturm_count(g, -bound, bound, chain))]
    while stack:
        lo, hi, n = stack.pop()
        if n == 0:
            continue
        if n == 1:
            found.append((lo, hi))
            continue
        mid = (lo + hi) / 2
        if g(mid) == 0:
            lo_in, hi_in = _exact_root_neighbourhood(g, chain, mid, lo, hi)
            found.append((lo_in, hi_in))
            pieces = [(lo, lo_in), (hi_in, hi)]
        else:
            pieces = [(lo, mid), (mid, hi)]
        for a, b in pieces:
            stack.append((a, b, sturm_count(g, a, b, chain)))
    found.sort()
    factors = squarefree_decomposition(f)
    chains = [SturmChain(a) if not a.is_constant() else None for a in factors]
    out = []
    for lo, hi in found:
        mult = 1
        for i, (a, ch) in enumerate(zip(factors, chains), start=1):
            if ch is not None and sturm_count(a, lo, hi, ch) == 1:
                mult = i
                break
        out.append(IsolatingInterval(lo, hi, 1, mult))
    return out


def _exact_root_neighbourhood(g, chain, r, lo, hi):
    """Shrink a window around the exact root r of g until it isolates r."""
    delta = min(r - lo, hi - r) / 2
    while True:
        a, b = r - delta, r + delta
        if g(a) != 0 and g(b) != 0 and sturm_count(g, a, b, chain) == 1:
            return a, b
        delta /= 2


def _as_tol(tol) -> Fraction:
    tol = as_rational(tol)
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    return tol


def _iteration_cap(width: Fraction, tol: Fraction) -> int:
    ratio = width / tol
    steps = max(1, math.ceil(math.log2(ratio))) if ratio > 1 else 1
    return 10 * steps


def bisect_refine(f: Polynomial, iv: IsolatingInterval, tol) -> RootValue:
    """Halve a sign-change bracket until its width is at most tol.

    Returns Exact as soon as an endpoint or midpoint evaluates to zero.
    """
    tol = _as_tol(tol)
    lo, hi = as_rational(iv.lo), as_rational(iv.hi)
    flo, fhi = f(lo), f(hi)
    if flo == 0:
        return Exact(lo)
    if fhi == 0:
        return Exact(hi)
    if sign(flo) == sign(fhi):
        raise RefinementFailed(f"no sign change on [{lo}, {hi}]")
    slo = sign(flo)
    cap = _iteration_cap(hi - lo, tol)
    steps = 0
    while hi - lo > tol:
        if steps >= cap:
            raise RefinementFailed("iteration cap exceeded")
        steps += 1
        mid = (lo + hi) / 2
        fm = f(mid)
        if fm == 0:
            return Exact(mid)
        if sign(fm) == slo:
            lo = mid
        else:
            hi = mid
    return Approx(lo, hi)


def exact_root_in(f: Polynomial, lo, hi) -> Fraction | None:
    """The rational root of f in [lo, hi], if the sole root there is rational.

    A rational root p/q of the primitive integer form of f has q dividing the
    leading coefficient L, and distinct such fractions sit at least 1/L**2
    apart.  Once the bracket is narrower than 1/(2*L**2) the closest fraction
    with denominator <= L to its midpoint is the only candidate.
    """
    lo, hi = as_rational(lo), as_rational(hi)
    g = squarefree_part(f).primitive_integer()
    lead = int(g.leading)
    for x in (lo, hi):
        if g(x) == 0:
            return x
    if sign(g(lo)) == sign(g(hi)):
        raise RefinementFailed(f"no sign change on [{lo}, {hi}]")
    root = bisect_refine(g, IsolatingInterval(lo, hi), Fraction(1, 2 * lead * lead + 1))
    if isinstance(root, Exact):
        return root.value
    candidate = root.midpoint.limit_denominator(lead)
    if root.lo <= candidate <= root.hi and g(candidate) == 0:
        return candidate
    return None


def refine_root(f: Polynomial, iv: IsolatingInterval, tol) -> RootValue:
    """Bisection to tol, promoted to Exact whenever the root is rational."""
    g = squarefree_part(f)
    r = exact_root_in(g, iv.lo, iv.hi)
    if r is not None:
        return Exact(r)
    return bisect_refine(g, iv, tol)


def real_roots(f: Polynomial, tol) -> list[tuple[RootValue, int]]:
    """All distinct real roots of f, ascending, as (value, multiplicity)."""
    return [(refine_root(f, iv, tol), iv.multiplicity) for iv in isolate_real_roots(f)]
