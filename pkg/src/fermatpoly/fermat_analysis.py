"""Monotonicity of polynomials through the difference quotient.

phi(t1, t2) = (f(t1) - f(t2)) / (t1 - t2) is a polynomial in two variables.
Its sign on pairs from an interval gives the direction of f there, and the
odd-multiplicity real roots of the diagonal phi(t, t) are where the
direction flips.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass
from fractions import Fraction

from .exact_arith import (
    BivariateQuotient,
    Polynomial,
    as_rational,
    squarefree_decomposition,
)
from .root_oracle import (
    NEG_INF,
    POS_INF,
    Approx,
    Exact,
    Infinity,
    RootValue,
    isolate_real_roots,
    refine_root,
    root_lower,
    root_upper,
    sign,
    sturm_count,
)


class Direction(enum.Enum):
    STRICTLY_INCREASING = "increasing"
    STRICTLY_DECREASING = "decreasing"

    def __str__(self):
        return self.value


Endpoint = Infinity | Exact | Approx


class NotMonotoneError(ValueError):
    pass


class DegenerateError(ValueError):
    pass


@dataclass(frozen=True)
class Segment:
    left: Endpoint
    right: Endpoint
    direction: Direction

    def __str__(self):
        left = "(-inf" if self.left is NEG_INF else f"[{_endpoint_text(self.left)}"
        right = "+inf)" if self.right is POS_INF else f"{_endpoint_text(self.right)}]"
        return f"{left},{right} {self.direction}"


def _endpoint_text(e: Endpoint) -> str:
    return str(e.value) if isinstance(e, Approx) else str(e)


@dataclass(frozen=True)
class MonotonicityDecomposition:
    segments: tuple[Segment, ...]

    @property
    def boundaries(self) -> list[Exact | Approx]:
        return [s.right for s in self.segments[:-1]]

    def check(self) -> None:
        """Raise AssertionError if the structural invariants are broken."""
        segs = self.segments
        assert segs, "empty decomposition"
        assert segs[0].left is NEG_INF and segs[-1].right is POS_INF
        for a, b in zip(segs, segs[1:]):
            assert a.right == b.left, "adjacent segments must share their endpoint"
            assert a.direction != b.direction, "directions must alternate"
        for s in segs[1:-1]:
            assert root_upper(s.left) < root_lower(s.right)

    def __str__(self):
        return "; ".join(str(s) for s in self.segments)


def fermat_quotient(f: Polynomial) -> BivariateQuotient:
    """phi with (t1 - t2) * phi(t1, t2) = f(t1) - f(t2).

    Built term by term from t1**n - t2**n = (t1 - t2) * sum_{i+j=n-1} t1**i t2**j.
    """
    if f.is_constant():
        raise ValueError("difference quotient of a constant polynomial is degenerate")
    terms: dict[tuple[int, int], Fraction] = {}
    for n, c in enumerate(f.coefficients):
        if n == 0 or c == 0:
            continue
        for i in range(n):
            key = (i, n - 1 - i)
            terms[key] = terms.get(key, Fraction(0)) + c
    return BivariateQuotient(terms)


def fermat_derivative(f: Polynomial) -> Polynomial:
    """The diagonal t -> phi(t, t) of the difference quotient."""
    return fermat_quotient(f).diagonal()


def _sign_changing_part(g: Polynomial) -> Polynomial:
    """Monic squarefree polynomial whose roots are the odd-multiplicity roots of g."""
    h = Polynomial([1])
    for i, a in enumerate(squarefree_decomposition(g), start=1):
        if i % 2:
            h = h * a
    return h


def _nonzero_sample(g: Polynomial, lo: Fraction | None, hi: Fraction | None) -> Fraction:
    """A rational strictly inside (lo, hi) where g does not vanish; None means unbounded."""
    if lo is None and hi is None:
        candidates = (Fraction(k) for k in range(len(g.coefficients) + 1))
    elif lo is None:
        candidates = (hi - 2**k for k in range(len(g.coefficients) + 1))
    elif hi is None:
        candidates = (lo + 2**k for k in range(len(g.coefficients) + 1))
    else:
        width = hi - lo
        candidates = (lo + width * k / (g.degree + 2) for k in range(1, int(g.degree) + 2))
        candidates = iter([(lo + hi) / 2, *candidates])
    for x in candidates:
        if g(x) != 0:
            return x
    raise AssertionError("no nonzero sample found")  # g has at most deg g roots


def _direction_from_sign(s: int) -> Direction:
    return Direction.STRICTLY_INCREASING if s > 0 else Direction.STRICTLY_DECREASING


def monotonicity_intervals(f: Polynomial, tol=Fraction(1, 10**12)) -> MonotonicityDecomposition:
    """Split the real line into maximal closed intervals of strict monotonicity."""
    if f.is_constant():
        raise ValueError("monotonicity needs a polynomial of degree >= 1")
    tol = as_rational(tol)
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    g = fermat_derivative(f)
    h = _sign_changing_part(g)
    boundaries: list[RootValue] = []
    if not h.is_constant():
        intervals = isolate_real_roots(h)
        boundaries = [refine_root(h, iv, tol) for iv in intervals]
        # Neighbouring isolating intervals may share an edge; refine until
        # the brackets are strictly separated so a sample fits between them.
        for k in range(len(boundaries) - 1):
            local_tol = tol
            while root_upper(boundaries[k]) >= root_lower(boundaries[k + 1]):
                local_tol /= 2
                boundaries[k] = refine_root(h, intervals[k], local_tol)
                boundaries[k + 1] = refine_root(h, intervals[k + 1], local_tol)

    edges: list[Endpoint] = [NEG_INF, *boundaries, POS_INF]
    segments = []
    for left, right in zip(edges, edges[1:]):
        lo = None if left is NEG_INF else root_upper(left)
        hi = None if right is POS_INF else root_lower(right)
        sample = _nonzero_sample(g, lo, hi)
        segments.append(Segment(left, right, _direction_from_sign(sign(g(sample)))))
    decomposition = MonotonicityDecomposition(tuple(segments))
    decomposition.check()
    return decomposition


def certify_direction(
    f: Polynomial, lo, hi, samples: int = 32, rng: random.Random | None = None
) -> Direction:
    """Direction of f on [lo, hi], certified by Sturm counting on the diagonal.

    Raises NotMonotoneError if the diagonal changes sign inside (lo, hi) and
    DegenerateError if f is constant.  As a spot check, phi is evaluated on
    random rational pairs from [lo, hi] and must carry the same sign.
    """
    lo, hi = as_rational(lo), as_rational(hi)
    if not lo < hi:
        raise ValueError("certify_direction needs lo < hi")
    if f.is_constant():
        raise DegenerateError("f is constant; the diagonal vanishes identically")
    g = fermat_derivative(f)
    h = _sign_changing_part(g)
    # Roots sitting exactly on the closed ends do not count for the open interval.
    for end in (lo, hi):
        while not h.is_constant() and h(end) == 0:
            h = h // Polynomial([-end, 1])
    if not h.is_constant() and sturm_count(h, lo, hi) > 0:
        raise NotMonotoneError(f"f is not monotone on [{lo}, {hi}]")
    s = sign(g(_nonzero_sample(g, lo, hi)))
    direction = _direction_from_sign(s)

    rng = rng or random.Random(0)
    phi = fermat_quotient(f)
    width = hi - lo
    for _ in range(samples):
        t1 = lo + width * Fraction(rng.randint(0, 2**20), 2**20)
        t2 = lo + width * Fraction(rng.randint(0, 2**20), 2**20)
        if t1 == t2:
            continue
        if sign(phi(t1, t2)) != s:
            raise AssertionError(f"difference quotient sign check failed at ({t1}, {t2})")
    return direction
