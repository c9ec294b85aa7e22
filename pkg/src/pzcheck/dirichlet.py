"""Truncated Dirichlet series with exact rational coefficients.

A series here is the coefficient vector (a_1, ..., a_N) of a formal sum
sum_n a_n n^{-s}, carried to an explicit truncation N.  Products of the
underlying sums become Dirichlet convolution of coefficients,

    (a * b)_n = sum_{d | n} a_d * b_{n/d},

which is what convolve() computes.  Every coefficient is a Fraction, so
equality of coefficients is exact equality, and a mismatch between two
series at some index is a theorem about the first N coefficients, not a
floating-point observation.

Truncation discipline: an operation on inputs valid up to N produces an
output valid up to its own (stated) truncation, never beyond; indices
past the truncation simply do not exist for the object.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .arith import PrimeTable, Rational


class DirichletSeries:
    """Coefficients a_1..a_N of a truncated Dirichlet series."""

    __slots__ = ("truncation", "_a")

    def __init__(self, coefficients: Sequence[Rational]):
        """Build from the list [a_1, ..., a_N]; N = len(list) >= 1."""
        if len(coefficients) < 1:
            raise ValueError("a Dirichlet series needs at least coefficient a_1")
        self.truncation = len(coefficients)
        # index 0 is a permanent zero so that self._a[n] is a_n
        self._a = [Fraction(0)] + [Fraction(c) for c in coefficients]

    def __getitem__(self, n: int) -> Rational:
        if not 1 <= n <= self.truncation:
            raise IndexError(f"coefficient index {n} outside [1, {self.truncation}]")
        return self._a[n]

    def coefficients(self) -> list[Rational]:
        """The list [a_1, ..., a_N]."""
        return self._a[1:]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DirichletSeries):
            return NotImplemented
        return self.truncation == other.truncation and self._a == other._a

    def __hash__(self) -> int:
        return hash((self.truncation, tuple(self._a)))

    def __repr__(self) -> str:
        head = ", ".join(str(c) for c in self._a[1 : min(self.truncation, 8) + 1])
        tail = ", ..." if self.truncation > 8 else ""
        return f"DirichletSeries(N={self.truncation}; {head}{tail})"


def unit_series(truncation: int) -> DirichletSeries:
    """The convolution identity: a_1 = 1, all other a_n = 0."""
    coeffs = [Fraction(0)] * truncation
    coeffs[0] = Fraction(1)
    return DirichletSeries(coeffs)


def zeta_series(truncation: int) -> DirichletSeries:
    """The series of zeta(s): a_n = 1 for every n."""
    if truncation < 1:
        raise ValueError(f"truncation must be >= 1, got {truncation}")
    return DirichletSeries([Fraction(1)] * truncation)


def prime_zeta_series(truncation: int, table: PrimeTable) -> DirichletSeries:
    """The series of P(s): a_p = 1 at primes p, zero elsewhere."""
    if truncation < 1:
        raise ValueError(f"truncation must be >= 1, got {truncation}")
    if truncation > table.limit:
        raise ValueError(
            f"truncation {truncation} exceeds prime table limit {table.limit}"
        )
    coeffs = [Fraction(0)] * truncation
    for p in table.primes:
        if p > truncation:
            break
        coeffs[p - 1] = Fraction(1)
    return DirichletSeries(coeffs)


def convolve(a: DirichletSeries, b: DirichletSeries) -> DirichletSeries:
    """Dirichlet convolution, truncated to min of the input truncations.

    Loops over d and multiples of d, so the cost is O(N log N) Fraction
    multiplies rather than a divisor search per index.
    """
    n = min(a.truncation, b.truncation)
    out = [Fraction(0)] * (n + 1)
    for d in range(1, n + 1):
        ad = a[d]
        if not ad:
            continue
        for m in range(d, n + 1, d):
            bm = b[m // d]
            if bm:
                out[m] += ad * bm
    return DirichletSeries(out[1:])


def invert(a: DirichletSeries) -> DirichletSeries:
    """Convolution inverse b with a * b = unit, truncated like a.

    Needs a_1 != 0.  Uses the forward recurrence: once b_d is final,
    push a_{m/d} * b_d into every multiple m of d, then finalize
    b_m = -(accumulated)/a_1 in increasing m.
    """
    if a[1] == 0:
        raise ValueError("series with a_1 = 0 has no convolution inverse")
    n = a.truncation
    inv_a1 = 1 / a[1]
    b = [Fraction(0)] * (n + 1)
    acc = [Fraction(0)] * (n + 1)
    b[1] = inv_a1
    for d in range(1, n + 1):
        if d > 1:
            b[d] = -acc[d] * inv_a1
        bd = b[d]
        if not bd:
            continue
        for m in range(2 * d, n + 1, d):
            am = a[m // d]
            if am:
                acc[m] += am * bd
    return DirichletSeries(b[1:])


def dilate(a: DirichletSeries, k: int, truncation: int) -> DirichletSeries:
    """Substitute s -> k*s: coefficient a_n moves to index n**k.

    The result is valid up to min(truncation, a.truncation ** k), since
    indices beyond a.truncation ** k would need source coefficients past
    the input's truncation.
    """
    if k < 1:
        raise ValueError(f"dilation order must be >= 1, got {k}")
    if truncation < 1:
        raise ValueError(f"truncation must be >= 1, got {truncation}")
    n = min(truncation, a.truncation**k)
    out = [Fraction(0)] * (n + 1)
    m = 1
    while m**k <= n:
        out[m**k] = a[m]
        m += 1
    return DirichletSeries(out[1:])


def linear_combine(
    terms: Iterable[tuple[Rational, DirichletSeries]]
) -> DirichletSeries:
    """Sum of c_i * series_i, truncated to the minimum truncation."""
    terms = list(terms)
    if not terms:
        raise ValueError("linear_combine needs at least one term")
    n = min(s.truncation for _, s in terms)
    out = [Fraction(0)] * (n + 1)
    for c, s in terms:
        c = Fraction(c)
        if not c:
            continue
        for i in range(1, n + 1):
            si = s[i]
            if si:
                out[i] += c * si
    return DirichletSeries(out[1:])


def first_mismatch(
    a: DirichletSeries, b: DirichletSeries
) -> tuple[int, Rational, Rational] | None:
    """Smallest n with a_n != b_n, as (n, a_n, b_n); None if all agree.

    Comparing series of different truncations is refused rather than
    silently clipped: agreement over different ranges is a different
    statement.
    """
    if a.truncation != b.truncation:
        raise ValueError(
            f"truncation mismatch: {a.truncation} vs {b.truncation}"
        )
    for n in range(1, a.truncation + 1):
        if a[n] != b[n]:
            return (n, a[n], b[n])
    return None


def claim_lhs_series(truncation: int) -> DirichletSeries:
    """Series of 2/zeta(s): twice the convolution inverse of zeta.

    Coefficientwise this is 2*mu(n), which the tests check against an
    independent Mobius computation.
    """
    return linear_combine([(Fraction(2), invert(zeta_series(truncation)))])


def claim_rhs_series(truncation: int, table: PrimeTable) -> DirichletSeries:
    """Series of 2 - 2 P(s) + P(s)^2 - P(2s), all terms exact."""
    p = prime_zeta_series(truncation, table)
    return linear_combine(
        [
            (Fraction(2), unit_series(truncation)),
            (Fraction(-2), p),
            (Fraction(1), convolve(p, p)),
            (Fraction(-1), dilate(p, 2, truncation)),
        ]
    )
