"""Exact rational polynomials in one variable, plus the two-variable quotient table.

All coefficients are :class:`fractions.Fraction`.  Polynomials are immutable
and store coefficients in ascending order (index ``i`` is the coefficient of
``t**i``) with trailing zeros stripped, so the zero polynomial is ``()``.
"""

from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Iterable, Mapping

Rational = Fraction

DEFAULT_MAX_DEGREE = 64


def as_rational(value) -> Fraction:
    """Coerce ints, Fractions, decimal strings and floats to an exact Fraction.

    Floats go through their shortest ``repr`` so that ``1e-12`` becomes
    exactly ``1/10**12`` rather than the nearest binary double.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, _RationalABC)):
        return Fraction(value)
    if isinstance(value, float):
        if not math.isfinite(value):
            raise ValueError(f"not a finite number: {value!r}")
        return Fraction(repr(value))
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not a rational number: {value!r}") from exc
    raise TypeError(f"cannot interpret {type(value).__name__} as a rational")


def format_rational(r: Fraction) -> str:
    if r.denominator == 1:
        return str(r.numerator)
    return f"{r.numerator}/{r.denominator}"


def integer_nth_root(n: int, k: int) -> int | None:
    """Exact k-th root of a nonnegative integer, or None if n is not a k-th power."""
    if n < 0:
        raise ValueError("negative radicand")
    if n < 2:
        return n
    if k == 2:
        r = math.isqrt(n)
        return r if r * r == n else None
    # Newton iteration on integers, started above the root.
    x = 1 << -(-n.bit_length() // k)
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            break
        x = y
    return x if x**k == n else None


def rational_nth_root(r: Fraction, k: int) -> Fraction | None:
    """Exact real k-th root of a rational if it is rational, else None.

    Odd k accepts negative input.  Works on the reduced numerator and
    denominator separately, which is valid because they are coprime.
    """
    r = Fraction(r)
    if r < 0:
        if k % 2 == 0:
            return None
        root = rational_nth_root(-r, k)
        return None if root is None else -root
    num = integer_nth_root(r.numerator, k)
    if num is None:
        return None
    den = integer_nth_root(r.denominator, k)
    if den is None:
        return None
    return Fraction(num, den)


class Polynomial:
    """Univariate polynomial in ``t`` with exact rational coefficients."""

    __slots__ = ("_coeffs",)

    def __init__(self, coefficients: Iterable = ()):
        coeffs = [as_rational(c) for c in coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self._coeffs = tuple(coeffs)

    @classmethod
    def monomial(cls, degree: int, coeff=1) -> Polynomial:
        return cls([0] * degree + [coeff])

    @classmethod
    def from_roots(cls, roots: Iterable) -> Polynomial:
        p = cls([1])
        for r in roots:
            p = p * cls([-as_rational(r), 1])
        return p

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self):
        """Degree as an int; ``-math.inf`` for the zero polynomial."""
        return len(self._coeffs) - 1 if self._coeffs else -math.inf

    @property
    def leading(self) -> Fraction:
        return self._coeffs[-1] if self._coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self._coeffs

    def is_constant(self) -> bool:
        return len(self._coeffs) <= 1

    def __bool__(self):
        return bool(self._coeffs)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self._coeffs == other._coeffs
        if isinstance(other, (int, Fraction)):
            return self._coeffs == Polynomial([other])._coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self._coeffs)

    def __call__(self, t) -> Fraction:
        return poly_eval(self, t)

    def __neg__(self):
        return Polynomial(-c for c in self._coeffs)

    def __add__(self, other):
        other = _lift(other)
        if other is NotImplemented:
            return other
        a, b = self._coeffs, other._coeffs
        n = max(len(a), len(b))
        return Polynomial(
            (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)
        )

    __radd__ = __add__

    def __sub__(self, other):
        other = _lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _lift(other)
        if other is NotImplemented:
            return other
        a, b = self._coeffs, other._coeffs
        if not a or not b:
            return Polynomial()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative exponent")
        result = Polynomial([1])
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other):
        return poly_divmod(self, _lift(other))

    def __floordiv__(self, other):
        return poly_divmod(self, _lift(other))[0]

    def __mod__(self, other):
        return poly_divmod(self, _lift(other))[1]

    def monic(self) -> Polynomial:
        if not self._coeffs:
            return self
        lc = self._coeffs[-1]
        return Polynomial(c / lc for c in self._coeffs)

    def primitive_integer(self) -> Polynomial:
        """Scale to integer coefficients with gcd 1 and positive leading coefficient."""
        if not self._coeffs:
            return self
        den = math.lcm(*(c.denominator for c in self._coeffs))
        ints = [int(c * den) for c in self._coeffs]
        g = math.gcd(*ints)
        if ints[-1] < 0:
            g = -g
        return Polynomial(Fraction(i // g) for i in ints)

    def __repr__(self):
        return f"Polynomial({format_polynomial(self)!r})"

    def __str__(self):
        return format_polynomial(self)


def _lift(value):
    if isinstance(value, Polynomial):
        return value
    if isinstance(value, (int, Fraction)):
        return Polynomial([value])
    return NotImplemented


def poly_eval(f: Polynomial, t) -> Fraction:
    t = as_rational(t)
    acc = Fraction(0)
    for c in reversed(f.coefficients):
        acc = acc * t + c
    return acc


def poly_shift(f: Polynomial, s) -> Polynomial:
    """Return g with g(u) = f(u + s), via repeated synthetic division (Taylor shift)."""
    s = as_rational(s)
    coeffs = list(f.coefficients)
    if s == 0 or len(coeffs) <= 1:
        return Polynomial(coeffs)
    n = len(coeffs)
    for i in range(n - 1):
        for j in range(n - 2, i - 1, -1):
            coeffs[j] += s * coeffs[j + 1]
    return Polynomial(coeffs)


def poly_scale_arg(f: Polynomial, k) -> Polynomial:
    """Return g with g(u) = f(k*u)."""
    k = as_rational(k)
    if k == 0:
        raise ValueError("scale factor must be nonzero")
    return Polynomial(c * k**i for i, c in enumerate(f.coefficients))


def formal_derivative(f: Polynomial) -> Polynomial:
    return Polynomial(i * c for i, c in enumerate(f.coefficients) if i)


def poly_divmod(f: Polynomial, g: Polynomial) -> tuple[Polynomial, Polynomial]:
    if g.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(f.coefficients)
    dg = len(g.coefficients) - 1
    lc = g.leading
    if len(rem) - 1 < dg:
        return Polynomial(), f
    quot = [Fraction(0)] * (len(rem) - dg)
    for k in range(len(rem) - 1 - dg, -1, -1):
        q = rem[k + dg] / lc
        quot[k] = q
        if q:
            for j, gc in enumerate(g.coefficients):
                rem[k + j] -= q * gc
    return Polynomial(quot), Polynomial(rem[:dg])


def poly_gcd(f: Polynomial, g: Polynomial) -> Polynomial:
    """Monic gcd by the Euclidean algorithm over Q; gcd(0, 0) = 0."""
    while g:
        f, g = g, poly_divmod(f, g)[1]
    return f.monic()


def squarefree_decomposition(f: Polynomial) -> list[Polynomial]:
    """Yun's algorithm: monic, pairwise coprime a_1, a_2, ... with f = lc * prod a_i**i.

    Entry ``k`` of the returned list is ``a_{k+1}``; trailing trivial factors
    are dropped.
    """
    if f.is_constant():
        return []
    f = f.monic()
    fp = formal_derivative(f)
    a = poly_gcd(f, fp)
    b = f // a
    c = fp // a
    d = c - formal_derivative(b)
    out = []
    while not b.is_constant():
        a = poly_gcd(b, d)
        out.append(a)
        b = b // a
        c = d // a
        d = c - formal_derivative(b)
    while out and out[-1].is_constant():
        out.pop()
    return out


def squarefree_part(f: Polynomial) -> Polynomial:
    """Monic product of the distinct irreducible factors of f."""
    if f.is_constant():
        return Polynomial([1]) if f else f
    f = f.monic()
    return f // poly_gcd(f, formal_derivative(f))


def _format_coeff_term(coeff: Fraction, var: str, first: bool) -> str:
    sign = "-" if coeff < 0 else "+"
    mag = abs(coeff)
    if var:
        body = var if mag == 1 else f"{format_rational(mag)}*{var}"
    else:
        body = format_rational(mag)
    if first:
        return body if sign == "+" else f"-{body}"
    return f" {sign} {body}"


def _power(var: str, e: int) -> str:
    if e == 0:
        return ""
    return var if e == 1 else f"{var}^{e}"


def format_polynomial(f: Polynomial, var: str = "t") -> str:
    """Descending-degree text that :func:`parse_polynomial` reads back."""
    parts = []
    for e in range(len(f.coefficients) - 1, -1, -1):
        c = f.coefficients[e]
        if c:
            parts.append(_format_coeff_term(c, _power(var, e), not parts))
    return "".join(parts) if parts else "0"


class BivariateQuotient:
    """Polynomial in (t1, t2) stored as a map from exponent pairs to coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[tuple[int, int], object]):
        self._terms = {
            (int(i), int(j)): as_rational(c) for (i, j), c in terms.items() if c != 0
        }

    @property
    def terms(self) -> dict[tuple[int, int], Fraction]:
        return dict(self._terms)

    @property
    def total_degree(self):
        if not self._terms:
            return -math.inf
        return max(i + j for i, j in self._terms)

    def coefficient(self, i: int, j: int) -> Fraction:
        return self._terms.get((i, j), Fraction(0))

    def is_symmetric(self) -> bool:
        return all(self.coefficient(j, i) == c for (i, j), c in self._terms.items())

    def __call__(self, t1, t2) -> Fraction:
        t1, t2 = as_rational(t1), as_rational(t2)
        return sum((c * t1**i * t2**j for (i, j), c in self._terms.items()), Fraction(0))

    def diagonal(self) -> Polynomial:
        """The univariate polynomial t -> phi(t, t)."""
        if not self._terms:
            return Polynomial()
        coeffs = [Fraction(0)] * (self.total_degree + 1)
        for (i, j), c in self._terms.items():
            coeffs[i + j] += c
        return Polynomial(coeffs)

    def sorted_terms(self) -> list[tuple[tuple[int, int], Fraction]]:
        """Graded order: total degree descending, then t1 exponent descending."""
        return sorted(self._terms.items(), key=lambda kv: (-(kv[0][0] + kv[0][1]), -kv[0][0]))

    def __eq__(self, other):
        if isinstance(other, BivariateQuotient):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __str__(self):
        parts = []
        for (i, j), c in self.sorted_terms():
            var = "*".join(p for p in (_power("t1", i), _power("t2", j)) if p)
            parts.append(_format_coeff_term(c, var, not parts))
        return "".join(parts) if parts else "0"

    def __repr__(self):
        return f"BivariateQuotient({str(self)!r})"


class PolynomialSyntaxError(ValueError):
    """Malformed polynomial text; ``offset`` is the byte position of the problem."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.message = message
        self.offset = offset


class DegreeLimitError(ValueError):
    pass


def parse_polynomial(text: str, max_degree: int = DEFAULT_MAX_DEGREE) -> Polynomial:
    """Parse ``[coeff][*][t[^exp]]`` terms joined by ``+``/``-``.

    >>> parse_polynomial("1/2*t^2 + t").coefficients
    (Fraction(0, 1), Fraction(1, 1), Fraction(1, 2))
    """
    return _Parser(text, max_degree).parse()


class _Parser:
    def __init__(self, text: str, max_degree: int):
        self.text = text
        self.max_degree = max_degree
        # Offsets are byte offsets into the UTF-8 encoding of the input.
        self.tokens = []
        byte_pos = 0
        for ch in text:
            if not ch.isspace():
                self.tokens.append((ch, byte_pos))
            byte_pos += len(ch.encode("utf-8"))
        self.end = byte_pos
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos][0] if self.pos < len(self.tokens) else ""

    def offset(self):
        return self.tokens[self.pos][1] if self.pos < len(self.tokens) else self.end

    def fail(self, message):
        raise PolynomialSyntaxError(message, self.offset())

    def integer(self) -> int:
        start = self.pos
        while self.peek().isdigit() and self.peek().isascii():
            self.pos += 1
        if self.pos == start:
            self.fail("expected an integer")
        return int("".join(ch for ch, _ in self.tokens[start:self.pos]))

    def parse(self) -> Polynomial:
        if not self.tokens:
            self.fail("empty expression")
        coeffs: dict[int, Fraction] = {}
        sign = 1
        if self.peek() in "+-":
            sign = -1 if self.peek() == "-" else 1
            self.pos += 1
        while True:
            coeff, exp = self.term()
            coeffs[exp] = coeffs.get(exp, Fraction(0)) + sign * coeff
            op = self.peek()
            if op == "":
                break
            if op not in "+-":
                self.fail(f"unexpected character {op!r}")
            sign = -1 if op == "-" else 1
            self.pos += 1
        top = max(coeffs)
        return Polynomial(coeffs.get(e, 0) for e in range(top + 1))

    def term(self) -> tuple[Fraction, int]:
        ch = self.peek()
        coeff = None
        if ch.isdigit():
            num = self.integer()
            coeff = Fraction(num)
            if self.peek() == "/":
                self.pos += 1
                at = self.offset()
                den = self.integer()
                if den == 0:
                    raise PolynomialSyntaxError("zero denominator", at)
                coeff = Fraction(num, den)
            if self.peek() == "*":
                self.pos += 1
                if not self.peek().isalpha():
                    self.fail("expected variable after '*'")
        elif ch == "":
            self.fail("expected a term")
        ch = self.peek()
        if ch.isalpha():
            if ch != "t":
                self.fail(f"unsupported variable {ch!r}")
            self.pos += 1
            if self.peek().isalpha():
                self.fail("unsupported variable name")
            exp = 1
            if self.peek() == "^":
                self.pos += 1
                at = self.offset()
                exp = self.integer()
                if exp > self.max_degree:
                    raise DegreeLimitError(
                        f"degree {exp} exceeds the cap of {self.max_degree} at offset {at}"
                    )
            return (Fraction(1) if coeff is None else coeff), exp
        if coeff is None:
            self.fail(f"unexpected character {ch!r}")
        return coeff, 0
