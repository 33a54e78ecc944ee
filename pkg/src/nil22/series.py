"""Dirichlet-series arithmetic for counting class-<=2, 2-generator nilpotent groups.

The number g(n) of isomorphism classes of such groups of order n is a
multiplicative arithmetic function: finite nilpotent groups split into their
Sylow subgroups, so the generating function factors over primes,

    sum_n g(n) n^(-s)  =  prod_p  sum_i g(p^i) t^i      (t = p^(-s)).

The local factor is the same rational function for every prime,

    1 / ((1 - t) (1 - t^2) (1 - t^3)^2 (1 - t^4)),

equivalently zeta_p(s) zeta_p(2s) zeta_p(3s)^2 zeta_p(4s).  This module
expands that factor as a truncated integer power series, assembles the global
coefficients g(1..N) by multiplicativity, and evaluates the summatory
function S(N) = sum_{m<=N} g(m), whose linear growth constant is the residue
of the global series at s = 1.
"""

import math
from dataclasses import dataclass

import numpy as np

from . import _kernels

DEFAULT_TRUNCATION = 64

#: Closed form for the local factor: one geometric series per exponent.
LOCAL_FACTOR_PARTS = (1, 2, 3, 3, 4)

#: Apery's constant zeta(3), enough digits for a float64 literal.
ZETA_3 = 1.2020569031595943

#: Growth constant of the summatory function: residue at s = 1 of
#: zeta(s) zeta(2s) zeta(3s)^2 zeta(4s), i.e. zeta(2) zeta(3)^2 zeta(4)
#: = pi^6/540 * zeta(3)^2 = 2.5725008684632743...
GROWTH_CONSTANT = math.pi**6 / 540.0 * ZETA_3**2


@dataclass(frozen=True)
class LocalSeries:
    """Truncated power series in t = p^(-s) with integer coefficients."""

    coeffs: tuple

    def __post_init__(self):
        if len(self.coeffs) == 0:
            raise ValueError("a truncated series needs at least its constant term")
        if any(c < 0 for c in self.coeffs):
            raise ValueError("local series coefficients must be nonnegative")

    @property
    def max_degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, degree: int) -> int:
        return self.coeffs[degree]


@dataclass(frozen=True, eq=False)
class GlobalCoefficients:
    """Table of g(1..N); ``values[n]`` is g(n), index 0 is unused."""

    values: np.ndarray

    @property
    def upper_bound(self) -> int:
        return self.values.shape[0] - 1

    def __getitem__(self, n: int) -> int:
        if not 1 <= n <= self.upper_bound:
            raise IndexError(f"n={n} outside 1..{self.upper_bound}")
        return int(self.values[n])


@dataclass(frozen=True)
class AsymptoticReport:
    """Summatory value S(N), the ratio S(N)/N and the reference constant."""

    upper_bound: int
    summatory: int
    ratio: float
    target_constant: float


def _geometric_expansion(parts, max_degree: int) -> tuple:
    # Product of 1/(1 - t^k) over k in parts, by the unbounded-knapsack pass.
    coeffs = [0] * (max_degree + 1)
    coeffs[0] = 1
    for part in parts:
        for i in range(part, max_degree + 1):
            coeffs[i] += coeffs[i - part]
    return tuple(coeffs)


def local_factor_closed_form(max_degree: int = DEFAULT_TRUNCATION) -> LocalSeries:
    """Expand 1/((1-t)(1-t^2)(1-t^3)^2(1-t^4)) through degree ``max_degree``.

    The coefficient of t^k is g(p^k) for every prime p; the first values are
    1, 1, 2, 4, 6, 8, 13, ...
    """
    if max_degree < 0:
        raise ValueError("max_degree must be nonnegative")
    return LocalSeries(_geometric_expansion(LOCAL_FACTOR_PARTS, max_degree))


def abelian_factor(d: int, max_degree: int = DEFAULT_TRUNCATION) -> LocalSeries:
    """Local factor of the abelian count on at most d generators.

    Expansion of prod_{i=1..d} 1/(1 - t^i); the coefficient of t^k counts
    partitions of k into parts of size at most d.
    """
    if d < 1:
        raise ValueError("d must be positive")
    if max_degree < 0:
        raise ValueError("max_degree must be nonnegative")
    return LocalSeries(_geometric_expansion(range(1, d + 1), max_degree))


def series_multiply(a: LocalSeries, b: LocalSeries) -> LocalSeries:
    """Cauchy product truncated to the smaller of the two degrees."""
    deg = min(a.max_degree, b.max_degree)
    out = [0] * (deg + 1)
    for i in range(deg + 1):
        ai = a.coeffs[i]
        if ai == 0:
            continue
        for j in range(deg + 1 - i):
            out[i + j] += ai * b.coeffs[j]
    return LocalSeries(tuple(out))


def _prime_power_table(upper_bound: int) -> np.ndarray:
    # g(p^k) for every k that can occur below the bound (2^k <= N).
    max_exp = upper_bound.bit_length() - 1
    local = local_factor_closed_form(max(max_exp, 1))
    return np.asarray(local.coeffs, dtype=np.int64)


def global_coefficients(upper_bound: int) -> GlobalCoefficients:
    """Multiplicative assembly of g(1..upper_bound).

    Factors every n with a smallest-prime-factor sieve and multiplies the
    local coefficients of its prime-power parts.  Linear memory in the bound.
    """
    if upper_bound < 1:
        raise ValueError("upper_bound must be at least 1")
    spf = _kernels.spf_sieve(upper_bound)
    values = _kernels.multiplicative_from_spf(spf, _prime_power_table(upper_bound))
    values.setflags(write=False)
    return GlobalCoefficients(values)


def summatory(upper_bound: int) -> AsymptoticReport:
    """Exact S(N) = sum_{m<=N} g(m) together with the ratio S(N)/N.

    The ratio approaches GROWTH_CONSTANT; the relative error decays like
    N^(-1/2) because the next singularity of the continued series sits at
    s = 1/2, so 5% at N = 10^6 is a conservative acceptance band.
    """
    table = global_coefficients(upper_bound)
    total = int(table.values.sum())
    return AsymptoticReport(
        upper_bound=upper_bound,
        summatory=total,
        ratio=total / upper_bound,
        target_constant=GROWTH_CONSTANT,
    )
