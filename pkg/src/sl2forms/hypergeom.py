"""A factorial-sum identity and its terminating ₃F₂ restatement.

The identity, for integers 0 ≤ l ≤ k ≤ min(m, n):

    Σ_{i=0}^{k} (-1)^i (m-i)!(n-k+i)! / (i!(k-i)!(m-l-i)!(n+l-2k+i)!) = (-1)^{k+l}

with the convention 1/j! = 0 for j < 0, which reproduces the natural
max/min summation bounds automatically.  `km_sum` evaluates the left side
exactly and `km_range_verify` sweeps every admissible tuple up to a bound.

The same sum is a terminating hypergeometric series at unit argument.
Taking the ratio of consecutive summands gives

    t_{i+1}/t_i = (i-k)(i+n-k+1)(i-(m-l)) / ((i-m)(i+n+l-2k+1)(i+1)),

so, when n+l-2k ≥ 0 (the i = 0 term nonzero),

    km_sum = t₀ · ₃F₂(-k, n-k+1, -(m-l); -m, n+l-2k+1; 1),
    t₀     = m!(n-k)! / (k!(m-l)!(n+l-2k)!).

This parameterization is derived here, not quoted from anywhere, and is
therefore always cross-checked against `km_sum`; `to_3f2` refuses the
n+l-2k < 0 case rather than patching prefactors.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .rationals import factorial, reciprocal_factorial


class UnsupportedMappingError(ValueError):
    """The hypergeometric restatement does not cover this parameter tuple."""


class IllDefinedSeriesError(ValueError):
    """A lower Pochhammer factor vanishes at or before the truncation index."""


@dataclass(frozen=True)
class KMParams:
    """Integer parameters with 0 ≤ l ≤ k ≤ min(m, n)."""

    k: int
    l: int
    m: int
    n: int

    def __post_init__(self) -> None:
        if not 0 <= self.l <= self.k <= min(self.m, self.n):
            raise ValueError(
                f"need 0 <= l <= k <= min(m, n); got k={self.k}, l={self.l}, "
                f"m={self.m}, n={self.n}"
            )


@dataclass(frozen=True)
class HypergeomSpec:
    """A ₃F₂ series: three upper parameters, two lower, one argument.

    At least one upper parameter must be a non-positive integer so the
    series terminates.
    """

    upper: tuple[Fraction, Fraction, Fraction]
    lower: tuple[Fraction, Fraction]
    argument: Fraction

    def __post_init__(self) -> None:
        if not any(a <= 0 and a.denominator == 1 for a in self.upper):
            raise ValueError(
                "series does not terminate: no upper parameter is a "
                "non-positive integer"
            )

    @property
    def truncation_index(self) -> int:
        """Smallest |a| over non-positive-integer upper parameters."""
        return min(
            int(-a) for a in self.upper if a <= 0 and a.denominator == 1
        )


@dataclass(frozen=True)
class KMSweepReport:
    """Exhaustive check of the identity for all admissible tuples, m,n ≤ bound."""

    bound: int
    tuples: int
    failures: tuple[tuple[int, int, int, int], ...]

    @property
    def ok(self) -> bool:
        return not self.failures


def km_sum(p: KMParams) -> Fraction:
    """The left-hand sum, exactly (expected value: (-1)^{k+l})."""
    total = Fraction(0)
    for i in range(p.k + 1):
        total += (
            (-1) ** i
            * factorial(p.m - i)
            * factorial(p.n - p.k + i)
            * reciprocal_factorial(i)
            * reciprocal_factorial(p.k - i)
            * reciprocal_factorial(p.m - p.l - i)
            * reciprocal_factorial(p.n + p.l - 2 * p.k + i)
        )
    return total


def km_check(p: KMParams) -> bool:
    """True iff the sum equals (-1)^{k+l} exactly."""
    return km_sum(p) == (-1) ** (p.k + p.l)


def admissible_tuples(bound: int):
    """Yield every KMParams with 0 ≤ m, n ≤ bound, 0 ≤ l ≤ k ≤ min(m, n)."""
    for m in range(bound + 1):
        for n in range(bound + 1):
            for k in range(min(m, n) + 1):
                for l in range(k + 1):
                    yield KMParams(k=k, l=l, m=m, n=n)


def km_range_verify(bound: int) -> KMSweepReport:
    """Run km_check on every admissible tuple with m, n ≤ bound."""
    if bound < 0:
        raise ValueError(f"bound must be nonnegative (got {bound})")
    count = 0
    failures = []
    for p in admissible_tuples(bound):
        count += 1
        if not km_check(p):
            failures.append((p.k, p.l, p.m, p.n))
    return KMSweepReport(bound=bound, tuples=count, failures=tuple(failures))


def series_route_verify(bound: int) -> KMSweepReport:
    """Check prefactor × ₃F₂ = km_sum on every mappable tuple, m, n ≤ bound.

    Tuples with n+l-2k < 0 fall outside the series restatement and are
    skipped (they are covered by km_range_verify).
    """
    if bound < 0:
        raise ValueError(f"bound must be nonnegative (got {bound})")
    count = 0
    failures = []
    for p in admissible_tuples(bound):
        if p.n + p.l - 2 * p.k < 0:
            continue
        count += 1
        spec, prefactor = to_3f2(p)
        if prefactor * eval_3f2_terminating(spec) != km_sum(p):
            failures.append((p.k, p.l, p.m, p.n))
    return KMSweepReport(bound=bound, tuples=count, failures=tuple(failures))


def to_3f2(p: KMParams) -> tuple[HypergeomSpec, Fraction]:
    """Restate km_sum(p) as prefactor × ₃F₂(…; 1).

    Requires n+l-2k ≥ 0 so the i = 0 summand is nonzero; the excluded case
    is covered by km_sum directly.
    """
    shift = p.n + p.l - 2 * p.k
    if shift < 0:
        raise UnsupportedMappingError(
            f"n+l-2k = {shift} < 0: the sum starts above i = 0 and has no "
            "clean series form here; use km_sum"
        )
    spec = HypergeomSpec(
        upper=(
            Fraction(-p.k),
            Fraction(p.n - p.k + 1),
            Fraction(-(p.m - p.l)),
        ),
        lower=(Fraction(-p.m), Fraction(shift + 1)),
        argument=Fraction(1),
    )
    prefactor = Fraction(
        factorial(p.m) * factorial(p.n - p.k),
        factorial(p.k) * factorial(p.m - p.l) * factorial(shift),
    )
    return spec, prefactor


def eval_3f2_terminating(spec: HypergeomSpec) -> Fraction:
    """Σ_{i=0}^{T} (a₁)ᵢ(a₂)ᵢ(a₃)ᵢ / ((b₁)ᵢ(b₂)ᵢ i!) zⁱ with exact arithmetic.

    T is the truncation index; a lower Pochhammer factor vanishing at or
    before T makes the series ill-defined.
    """
    t = spec.truncation_index
    term = Fraction(1)
    total = Fraction(1)
    for i in range(t):
        num = Fraction(1)
        for a in spec.upper:
            num *= a + i
        den = Fraction(i + 1)
        for b in spec.lower:
            factor = b + i
            if not factor:
                raise IllDefinedSeriesError(
                    f"lower parameter {b} hits zero at index {i + 1} "
                    f"(truncation index {t})"
                )
            den *= factor
        term *= spec.argument * num / den
        total += term
    return total
