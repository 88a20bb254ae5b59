"""Exit criteria for the package; each test carries its criterion number."""

import decimal
import random
from fractions import Fraction

import pytest

from fermatpoly.cli import run
from fermatpoly.cubic_vieta import (
    Cubic,
    DepressedCubic,
    Kind,
    NoRealTriple,
    RootTriple,
    classify,
    depress,
    discriminant_value,
    sign_product_at_critical,
    solve_cubic,
    vieta_expand,
)
from fermatpoly.exact_arith import BivariateQuotient, Polynomial, formal_derivative, parse_polynomial
from fermatpoly.fermat_analysis import Direction, fermat_derivative, fermat_quotient, monotonicity_intervals
from fermatpoly.root_oracle import NEG_INF, POS_INF, Approx, Exact, isolate_real_roots, sturm_count

from conftest import random_polynomial, random_rational

F = Fraction
INC, DEC = Direction.STRICTLY_INCREASING, Direction.STRICTLY_DECREASING
TOL = F(1, 10**12)


def monotone_cli(poly):
    code, out = run(["monotone", poly])
    assert code == 0
    return out


@pytest.mark.criterion(1, "t^3 - 3t splits at exact -1 and 1 (inc/dec/inc)")
def test_cubic_monotonicity_segments():
    assert monotone_cli("t^3 - 3*t") == "(-inf,-1] increasing; [-1,1] decreasing; [1,+inf) increasing"
    dec = monotonicity_intervals(parse_polynomial("t^3 - 3*t"))
    assert [(s.left, s.right, s.direction) for s in dec.segments] == [
        (NEG_INF, Exact(F(-1)), INC),
        (Exact(F(-1)), Exact(F(1)), DEC),
        (Exact(F(1)), POS_INF, INC),
    ]


@pytest.mark.criterion(2, "difference quotient of t^3 - 3t is t1^2 + t1 t2 + t2^2 - 3")
def test_quotient_formula():
    phi = fermat_quotient(Polynomial([0, -3, 0, 1]))
    assert phi == BivariateQuotient({(2, 0): 1, (1, 1): 1, (0, 2): 1, (0, 0): -3})
    assert phi.terms == {(2, 0): 1, (1, 1): 1, (0, 2): 1, (0, 0): -3}


@pytest.mark.criterion(3, "critical product c^2 - 4 and 27(c^2 - 4) = D for 1000 random c")
def test_critical_product_identity():
    rng = random.Random(3)
    for _ in range(1000):
        c = random_rational(rng)
        dep = DepressedCubic(-3, c)
        value = sign_product_at_critical(dep)
        assert value == c * c - 4
        assert 27 * (c * c - 4) == discriminant_value(dep)


@pytest.mark.criterion(4, "forward: 1000 random real triples give D <= 0 and are recovered")
def test_forward_direction():
    rng = random.Random(4)
    for _ in range(1000):
        xyz = sorted(random_rational(rng) for _ in range(3))
        cub = vieta_expand(*xyz)
        assert classify(cub).discriminant <= 0
        sol = solve_cubic(cub, TOL)
        assert isinstance(sol, RootTriple)
        for got, want in zip(sol.roots, xyz):
            if isinstance(got, Exact):
                assert got.value == want
            else:
                assert abs(got.midpoint - want) <= F(1, 10**9)


@pytest.mark.criterion(5, "converse: 1000 random cubics with D > 0 have no triple and one real root")
def test_converse_direction():
    rng = random.Random(5)
    seen = 0
    while seen < 1000:
        cub = Cubic(random_rational(rng), random_rational(rng), random_rational(rng))
        if classify(cub).discriminant <= 0:
            continue
        seen += 1
        sol = solve_cubic(cub, TOL)
        assert isinstance(sol, NoRealTriple) and sol.discriminant > 0
        assert sturm_count(cub.polynomial(), NEG_INF, POS_INF) == 1


@pytest.mark.criterion(6, "degenerate case: (0,-3,2) -> (-1,-1,2) and (0,-3,-2) -> (-2,1,1), exact")
def test_degenerate_case():
    assert solve_cubic(Cubic(0, -3, 2)).roots == (Exact(F(-1)), Exact(F(-1)), Exact(F(2)))
    assert solve_cubic(Cubic(0, -3, -2)).roots == (Exact(F(-2)), Exact(F(1)), Exact(F(1)))


@pytest.mark.criterion(7, "b >= 0 branch: a real triple exists iff b = c = 0 (200 cases)")
def test_nonnegative_b_branch():
    rng = random.Random(7)
    cases = [(F(0), F(0)), (F(0), F(1)), (F(1), F(0))]
    while len(cases) < 200:
        b = abs(random_rational(rng)) if rng.random() < 0.8 else F(0)
        c = random_rational(rng) if rng.random() < 0.8 else F(0)
        cases.append((b, c))
    for b, c in cases:
        sol = solve_cubic(Cubic(0, b, c), TOL)
        assert isinstance(sol, RootTriple) == (b == 0 and c == 0)
        if isinstance(sol, RootTriple):
            assert sol.roots == (Exact(F(0)),) * 3


@pytest.mark.criterion(8, "diagonal of the quotient equals the formal derivative (500 polynomials)")
def test_diagonal_is_derivative():
    rng = random.Random(8)
    checked = 0
    while checked < 500:
        f = random_polynomial(rng, 8, 1)
        if f.is_constant():
            continue
        checked += 1
        assert fermat_derivative(f).coefficients == formal_derivative(f).coefficients


@pytest.mark.criterion(9, "t^4 - 4t decreases then increases, boundary exactly 1")
def test_quartic_exact_turn():
    assert monotone_cli("t^4 - 4*t") == "(-inf,1] decreasing; [1,+inf) increasing"
    dec = monotonicity_intervals(parse_polynomial("t^4 - 4*t"))
    assert dec.boundaries == [Exact(F(1))]
    assert [s.direction for s in dec.segments] == [DEC, INC]


def _decimal_bisection_oracle():
    """Root of 4t^3 - 36t^2 + 44t - 24 in (7, 8) by 80-digit decimal bisection."""
    ctx = decimal.Context(prec=80)
    D = decimal.Decimal

    def g(t):
        return ctx.subtract(
            ctx.add(ctx.multiply(4, ctx.power(t, 3)), ctx.multiply(44, t)),
            ctx.add(ctx.multiply(36, ctx.power(t, 2)), D(24)),
        )

    lo, hi = D(7), D(8)
    assert g(lo) < 0 < g(hi)
    for _ in range(200):
        mid = ctx.divide(ctx.add(lo, hi), 2)
        if g(mid) < 0:
            lo = mid
        else:
            hi = mid
    return F(lo), F(hi)


@pytest.mark.criterion(10, "t^4 - 12t^3 + 22t^2 - 24t + 10: one certified boundary in (7, 8) containing the oracle root")
def test_quartic_irrational_turn():
    f = parse_polynomial("t^4 - 12*t^3 + 22*t^2 - 24*t + 10")
    dep = depress(Cubic(9, 11, 6))
    assert (dep.p, dep.q, discriminant_value(dep)) == (-16, 27, 3299)
    dec = monotonicity_intervals(f, TOL)
    assert len(dec.boundaries) == 1
    (b,) = dec.boundaries
    assert isinstance(b, Approx)
    assert b.hi - b.lo <= TOL
    assert 7 < b.lo < b.hi < 8
    oracle_lo, oracle_hi = _decimal_bisection_oracle()
    assert b.lo <= oracle_lo and oracle_hi <= b.hi
    assert [s.direction for s in dec.segments] == [DEC, INC]
    text = monotone_cli("t^4 - 12*t^3 + 22*t^2 - 24*t + 10")
    assert text.startswith("(-inf,7.667417257") and "decreasing; [7.667417257" in text


@pytest.mark.criterion(11, "scaling covariance: D(p/k^2, q/k^3) = D/k^6 and the class is kept (200 cases)")
def test_scaling_covariance():
    rng = random.Random(11)
    for i in range(200):
        if i % 4 == 0:
            # force D = 0 cases: p = -3 m^2, q = 2 m^3
            m = random_rational(rng)
            p, q = -3 * m * m, 2 * m**3
        else:
            p, q = random_rational(rng), random_rational(rng)
        k = random_rational(rng) or F(1, 3)
        d = discriminant_value(DepressedCubic(p, q))
        assert discriminant_value(DepressedCubic(p / k**2, q / k**3)) == d / k**6
        assert classify(Cubic(0, p, q)).kind is classify(Cubic(0, p / k**2, q / k**3)).kind


def _random_cubic(rng, i):
    kind = i % 4
    if kind == 0:
        return Cubic(random_rational(rng), random_rational(rng), random_rational(rng))
    r = random_rational(rng)
    if kind == 1:
        return vieta_expand(r, r, r)
    if kind == 2:
        return vieta_expand(r, r, random_rational(rng))
    return vieta_expand(r, random_rational(rng), random_rational(rng))


@pytest.mark.criterion(12, "classification agrees with the Sturm oracle on 1000 cubics")
def test_oracle_agreement():
    rng = random.Random(12)
    distinct = {Kind.TRIPLE_ROOT: 1, Kind.DOUBLE_AND_SINGLE: 2, Kind.THREE_DISTINCT: 3, Kind.ONE_REAL_ROOT: 1}
    counts = dict.fromkeys(Kind, 0)
    for i in range(1000):
        cub = _random_cubic(rng, i)
        kind = classify(cub).kind
        counts[kind] += 1
        f = cub.polynomial()
        assert sturm_count(f, NEG_INF, POS_INF) == distinct[kind]
        if kind in (Kind.TRIPLE_ROOT, Kind.DOUBLE_AND_SINGLE):
            assert sum(iv.multiplicity for iv in isolate_real_roots(f)) == 3
    assert all(counts.values())
