"""Exact power sums of unimodular 2x2 matrices over the rationals.

For det(A) = 1 the Cayley-Hamilton identity A^2 - tr(A) A + I = 0 telescopes
the sum of the first 3^n powers into a closed form:

    sum_{k=1}^{3^n} A^k
        = (tr(A)+1) (tr(A^3)+1) ... (tr(A^(3^(n-1)))+1) * A^((3^n+1)/2).

Everything here is exact rational arithmetic (fractions.Fraction); there is
no floating point anywhere, so closed form versus brute-force summation is
an equality of values, not an approximation.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import DeterminantNotOne, LevelTooLarge, SizeMismatch

Rat = Fraction

DEFAULT_MAX_LEVEL = 12     # cap on n in sums up to 3^n
ORACLE_MAX_LEVEL = 6       # brute-force oracle runs up to 3^6 = 729 terms


@dataclass(frozen=True)
class Mat2Q:
    """Row-major 2x2 matrix of exact rationals."""

    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction

    def entries(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.a, self.b, self.c, self.d)

    def rows(self) -> list[list[Fraction]]:
        return [[self.a, self.b], [self.c, self.d]]


def mat2(a, b, c, d) -> Mat2Q:
    """Build a matrix, coercing ints / 'p/q' strings / Fractions exactly."""
    return Mat2Q(Fraction(a), Fraction(b), Fraction(c), Fraction(d))


IDENTITY = mat2(1, 0, 0, 1)
ZERO = mat2(0, 0, 0, 0)


def mat_mul(x: Mat2Q, y: Mat2Q) -> Mat2Q:
    return Mat2Q(
        x.a * y.a + x.b * y.c,
        x.a * y.b + x.b * y.d,
        x.c * y.a + x.d * y.c,
        x.c * y.b + x.d * y.d,
    )


def mat_add(x: Mat2Q, y: Mat2Q) -> Mat2Q:
    return Mat2Q(x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d)


def mat_scale(r, x: Mat2Q) -> Mat2Q:
    r = Fraction(r)
    return Mat2Q(r * x.a, r * x.b, r * x.c, r * x.d)


def mat_pow(x: Mat2Q, k: int) -> Mat2Q:
    """x**k by binary exponentiation; k = 0 gives the identity."""
    if k < 0:
        raise SizeMismatch("exponent must be non-negative")
    result = IDENTITY
    base = x
    while k:
        if k & 1:
            result = mat_mul(result, base)
        base = mat_mul(base, base)
        k >>= 1
    return result


def trace(x: Mat2Q) -> Fraction:
    return x.a + x.d


def det(x: Mat2Q) -> Fraction:
    return x.a * x.d - x.b * x.c


def cayley_hamilton_residual(x: Mat2Q) -> Mat2Q:
    """x^2 - tr(x) x + det(x) I, identically zero for every 2x2 matrix."""
    return mat_add(
        mat_mul(x, x),
        mat_add(mat_scale(-trace(x), x), mat_scale(det(x), IDENTITY)),
    )


def brute_sum(a: Mat2Q, n_terms: int) -> Mat2Q:
    """Independent oracle: sum_{k=1}^{N} a^k by multiply-accumulate."""
    if n_terms < 1:
        raise SizeMismatch("need at least one term")
    total = ZERO
    power = IDENTITY
    for _ in range(n_terms):
        power = mat_mul(power, a)
        total = mat_add(total, power)
    return total


@dataclass(frozen=True)
class SumResult:
    """Closed form for sum_{k=1}^{3^n} A^k with its trace factors.

    factors[j] = tr(A^(3^j)) + 1 for j = 0..n-1; power_exponent is
    (3^n + 1)/2; oracle, when requested and within range, is the
    brute-force sum over all 3^n terms.
    """

    n: int
    factors: tuple[Fraction, ...]
    power_exponent: int
    closed_form: Mat2Q
    oracle: Mat2Q | None = None

    @property
    def scalar(self) -> Fraction:
        out = Fraction(1)
        for f in self.factors:
            out *= f
        return out

    @property
    def oracle_matches(self) -> bool | None:
        if self.oracle is None:
            return None
        return self.closed_form == self.oracle


def trace_product_sum(a: Mat2Q, n: int, with_oracle: bool = False,
                      max_level: int = DEFAULT_MAX_LEVEL) -> SumResult:
    """Evaluate sum_{k=1}^{3^n} a^k through the trace-product closed form.

    Requires det(a) = 1 exactly.  The factors come from repeated cubing
    (a^(3^(j+1)) = (a^(3^j))^3); with_oracle additionally runs the
    brute-force sum when 3^n is within the oracle range.
    """
    d = det(a)
    if d != 1:
        raise DeterminantNotOne(d)
    if n < 1:
        raise SizeMismatch("level must be at least 1")
    if n > max_level:
        raise LevelTooLarge(f"level {n} exceeds cap {max_level}")

    factors = []
    power = a
    for _ in range(n):
        factors.append(trace(power) + 1)
        power = mat_mul(mat_mul(power, power), power)

    exponent = (3 ** n + 1) // 2
    closed = mat_pow(a, exponent)
    scalar = Fraction(1)
    for f in factors:
        scalar *= f
    closed = mat_scale(scalar, closed)

    oracle = None
    if with_oracle and n <= ORACLE_MAX_LEVEL:
        oracle = brute_sum(a, 3 ** n)

    return SumResult(
        n=n,
        factors=tuple(factors),
        power_exponent=exponent,
        closed_form=closed,
        oracle=oracle,
    )


def random_unimodular(seed: int, word_length: int, coeff_bound: int) -> Mat2Q:
    """Deterministic det-1 integer matrix: a seeded random product of
    elementary shears [[1, k], [0, 1]] and [[1, 0], [k, 1]], |k| <= bound."""
    if word_length < 0:
        raise SizeMismatch("word length must be non-negative")
    rng = random.Random(seed)
    out = IDENTITY
    for _ in range(word_length):
        k = rng.randint(-coeff_bound, coeff_bound)
        if rng.random() < 0.5:
            shear = mat2(1, k, 0, 1)
        else:
            shear = mat2(1, 0, k, 1)
        out = mat_mul(out, shear)
    return out
