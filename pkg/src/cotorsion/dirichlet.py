"""Truncated formal Dirichlet series with exact integer coefficients.

A series is the vector (a(1), ..., a(n_max)); multiplying two series is
Dirichlet convolution of their coefficient vectors.  The zeta identities
of this package are checked as exact coefficientwise equalities of such
vectors: no floating point, no analytic evaluation.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arith import divisors, factorize, is_square, sigma
from .errors import BadLength
from .okproj import ok_cardinality
from .projline import cardinality
from .quadring import QuadRing, enumerate_ideals, primes_above


@dataclass(frozen=True)
class DirichletSeries:
    """Coefficients a(1..n_max) of a truncated formal Dirichlet series."""

    coeffs: tuple[int, ...]

    @property
    def n_max(self) -> int:
        return len(self.coeffs)

    def a(self, n: int) -> int:
        return self.coeffs[n - 1]

    @classmethod
    def from_function(cls, n_max: int, f) -> "DirichletSeries":
        return cls(tuple(f(n) for n in range(1, n_max + 1)))


def convolve(f: DirichletSeries, g: DirichletSeries) -> DirichletSeries:
    """(f*g)(n) = sum over d*e = n of f(d) * g(e)."""
    if f.n_max != g.n_max:
        raise BadLength(f"truncations differ: {f.n_max} != {g.n_max}")
    n = f.n_max
    out = [0] * (n + 1)
    for d in range(1, n + 1):
        fd = f.coeffs[d - 1]
        if fd == 0:
            continue
        for e in range(1, n // d + 1):
            out[d * e] += fd * g.coeffs[e - 1]
    return DirichletSeries(tuple(out[1:]))


def series_zeta(n_max: int) -> DirichletSeries:
    """a(n) = 1: the Riemann zeta coefficient vector."""
    return DirichletSeries((1,) * n_max)


def series_zeta_shift(n_max: int) -> DirichletSeries:
    """a(n) = n: the coefficients of zeta(s - 1)."""
    return DirichletSeries(tuple(range(1, n_max + 1)))


def series_zeta_double(n_max: int) -> DirichletSeries:
    """a(n) = 1 iff n is a square: the coefficients of zeta(2s)."""
    return DirichletSeries.from_function(n_max, lambda n: 1 if is_square(n)[0] else 0)


def series_pf1(n_max: int) -> DirichletSeries:
    """a(n) = number of points of the projective line over Z/n."""
    return DirichletSeries.from_function(n_max, cardinality)


def series_sigma(n_max: int) -> DirichletSeries:
    """a(n) = sigma(n), the count of index-n sublattices of Z^2."""
    return DirichletSeries.from_function(n_max, sigma)


def series_z2(n_max: int) -> DirichletSeries:
    """a(n) = number of index-n sublattices of Z^2, by the stratum sum.

    Sums |PF^1 over Z/d| over divisors d of n with n/d a perfect square
    (the classification strata), not by enumerating lattices.
    """

    def count(n: int) -> int:
        total = 0
        for d in divisors(n):
            if is_square(n // d)[0]:
                total += cardinality(d)
        return total

    return DirichletSeries.from_function(n_max, count)


def series_square_support(f: DirichletSeries) -> DirichletSeries:
    """b(n) = f(sqrt(n)) when n is a square else 0: coefficients of F(2s)."""

    def value(n: int) -> int:
        sq, root = is_square(n)
        return f.a(root) if sq else 0

    return DirichletSeries.from_function(f.n_max, value)


def series_shift(f: DirichletSeries) -> DirichletSeries:
    """b(n) = n * f(n): coefficients of F(s - 1)."""
    return DirichletSeries(tuple(n * c for n, c in enumerate(f.coeffs, start=1)))


def _ideal_count_prime_power(K: QuadRing, p: int, k: int) -> int:
    above = primes_above(K, p)
    if len(above) == 2:
        return k + 1
    if above[0].f == 2:
        return 1 if k % 2 == 0 else 0
    return 1


def series_ideal_count(K: QuadRing, n_max: int) -> DirichletSeries:
    """a(n) = number of ideals of norm n: the Dedekind zeta coefficients.

    Computed multiplicatively from the splitting type of each prime;
    enumerate_ideals provides the independent cross-check in tests.
    """

    def count(n: int) -> int:
        total = 1
        for p, k in factorize(n):
            total *= _ideal_count_prime_power(K, p, k)
        return total

    return DirichletSeries.from_function(n_max, count)


def series_ok_pf1(K: QuadRing, n_max: int) -> DirichletSeries:
    """a(n) = sum of |PF^1 over O/I| over the ideals I of norm n."""

    def value(n: int) -> int:
        return sum(ok_cardinality(I) for I in enumerate_ideals(K, n))

    return DirichletSeries.from_function(n_max, value)


def series_ok_module_count(K: QuadRing, n_max: int) -> DirichletSeries:
    """a(n) = number of co-torsion submodules of O^2 with quotient size n.

    Stratum sum over the classifying data: quotient size N(L)*N(K) =
    N(L)^2 * N(I) and |PF^1_I| modules per (L, I), so
    a(n) = sum over l^2 * i = n of (#ideals of norm l) * (pf1 sum at i).
    """
    counts = series_ideal_count(K, n_max)
    pf1 = series_ok_pf1(K, n_max)

    def value(n: int) -> int:
        total = 0
        l = 1
        while l * l <= n:
            if n % (l * l) == 0:
                total += counts.a(l) * pf1.a(n // (l * l))
            l += 1
        return total

    return DirichletSeries.from_function(n_max, value)


@dataclass(frozen=True)
class IdentityReport:
    """Outcome of an exact coefficientwise comparison of two series."""

    n_max: int
    equal: bool
    first_mismatch: int | None = None
    lhs_value: int | None = None
    rhs_value: int | None = None

    def __str__(self) -> str:
        if self.equal:
            return f"equal up to {self.n_max}"
        return (
            f"mismatch at n={self.first_mismatch}: "
            f"{self.lhs_value} != {self.rhs_value}"
        )


def check_identity(lhs: DirichletSeries, rhs: DirichletSeries) -> IdentityReport:
    """Exact comparison; reports the first mismatching index if any."""
    if lhs.n_max != rhs.n_max:
        raise BadLength(f"truncations differ: {lhs.n_max} != {rhs.n_max}")
    for n in range(1, lhs.n_max + 1):
        if lhs.a(n) != rhs.a(n):
            return IdentityReport(lhs.n_max, False, n, lhs.a(n), rhs.a(n))
    return IdentityReport(lhs.n_max, True)
