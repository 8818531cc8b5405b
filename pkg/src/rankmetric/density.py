"""Density of MRD codes: exact desk-scale censuses, the two closed-form upper
bounds, and asymptotic limits as the field size or the column count grows.

Exact values are rationals; infinite products are never floated.  Instead
each truncated product comes with a certified two-sided enclosure whose tail
bound is geometric, so every reported interval provably contains the limit.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .codes import RankMetricCode, minimum_distance
from .errors import BudgetExceededError
from .fields import field_for_order
from .matrices import MatrixOverFq, enumerate_subspaces, rank_of_coded_rows
from .qcombinatorics import ball_size, nu, q_binomial, theta

DEFAULT_CENSUS_BUDGET = 10**6


def _validate(q: int, n: int, m: int, d: int) -> None:
    field_for_order(q)
    if not 2 <= n <= m:
        raise ValueError(f"need 2 <= n <= m, got n={n}, m={m}")
    if not 1 <= d <= n:
        raise ValueError(f"need 1 <= d <= n, got d={d}")


@dataclass(frozen=True)
class CensusResult:
    """Exhaustive census of k-dimensional subspaces of the matrix space,
    counted three equivalent ways (the equality of the counts is asserted)."""

    q: int
    n: int
    m: int
    d: int
    k: int
    total_subspaces: int
    min_distance_exactly_d: int
    ball_avoiding: int
    common_complement: int

    @property
    def density(self) -> Fraction:
        return Fraction(self.min_distance_exactly_d, self.total_subspaces)


def density_census(
    q: int, n: int, m: int, d: int, budget: int = DEFAULT_CENSUS_BUDGET
) -> CensusResult:
    """Census of all m(n-d+1)-dimensional codes, classifying the MRD ones.

    Counts codes with minimum distance exactly d, codes avoiding the rank
    ball of radius d-1 (minimum distance >= d), and common complements of all
    column-support spaces of dimension m(d-1).  The three counts coincide:
    the Singleton bound pins the minimum distance of a k-dimensional code at
    or below d, and the census asserts that rather than assuming it.
    """
    from .constructions import build_column_anticode

    _validate(q, n, m, d)
    spec = field_for_order(q)
    mn = m * n
    k = m * (n - d + 1)
    total = q_binomial(mn, k, q)
    if total > budget:
        raise BudgetExceededError("density census: use bounds", total, budget)

    support_rows: list[list[tuple[int, ...]]] = []
    for U in enumerate_subspaces(n, d - 1, spec):
        A = build_column_anticode(U, m)
        support_rows.append(
            [tuple(v.to_int() for v in B.vectorize()) for B in A.basis]
        )

    exact = 0
    avoiding = 0
    avoiding_next = 0
    complement = 0
    word_budget = q**k + 1
    for W in enumerate_subspaces(mn, k, spec):
        basis = tuple(MatrixOverFq.from_vector(spec, n, m, row) for row in W.basis)
        code = RankMetricCode(spec, n, m, basis)
        mind = minimum_distance(code, word_budget)
        if mind == d:
            exact += 1
        if mind >= d:
            avoiding += 1
        if mind >= d + 1:
            avoiding_next += 1
        code_rows = [tuple(v.to_int() for v in row) for row in W.basis]
        if all(
            rank_of_coded_rows(code_rows + a_rows, spec) == k + len(a_rows)
            for a_rows in support_rows
        ):
            complement += 1
    assert exact == avoiding - avoiding_next
    assert avoiding_next == 0
    assert complement == exact
    return CensusResult(q, n, m, d, k, total, exact, avoiding, complement)


def density_exact(
    q: int, n: int, m: int, d: int, budget: int = DEFAULT_CENSUS_BUDGET
) -> Fraction:
    """Exact fraction of m(n-d+1)-dimensional codes that are MRD with
    minimum distance d, by full census."""
    return density_census(q, n, m, d, budget).density


def density_bound_cc(q: int, n: int, m: int, d: int) -> Fraction:
    """Upper bound on the MRD density via common complements.

    Uses the pair-counting functions nu and theta.  For d = 1 every
    full-dimensional code is MRD and the bound degenerates to 1.
    """
    _validate(q, n, m, d)
    if d == 1:
        return Fraction(1)
    mn = m * n
    k = m * (n - d + 1)
    numerator = nu(mn, k, m * (d - 1), q) ** 2 * q_binomial(n, d - 1, q) ** 2
    # Pairs with dim(U meet U') = i exist only for i >= 2(d-1) - n.
    denom_sum = 0
    for i in range(max(0, 2 * (d - 1) - n), d):
        denom_sum += nu(mn, k, m * i, q) * theta(n, d - 1, i, q)
    return 1 - Fraction(numerator, q_binomial(mn, k, q) * denom_sum)


def density_bound_ball(q: int, n: int, m: int, d: int) -> Fraction:
    """Upper bound on the MRD density via avoidance of the rank-(d-1) ball."""
    _validate(q, n, m, d)
    mn = m * n
    k = m * (n - d + 1)
    ball_lines, rem = divmod(ball_size(n, m, d - 1, q) - 1, q - 1)
    assert rem == 0
    if ball_lines == 0:  # d = 1: the ball is only the zero matrix
        return Fraction(1)
    top = q_binomial(mn - 1, k - 1, q)
    numerator = ball_lines * top**2
    denominator = q_binomial(mn, k, q) * (top + (ball_lines - 1) * q_binomial(mn - 2, k - 2, q))
    return 1 - Fraction(numerator, denominator)


# --- certified enclosures for the infinite products --------------------------


@dataclass(frozen=True)
class Enclosure:
    """Exact rational interval [lo, hi] certified to contain a limit value."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError("empty enclosure")

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def contains(self, value: Fraction) -> bool:
        return self.lo <= value <= self.hi

    def overlaps(self, other: Enclosure) -> bool:
        return self.lo <= other.hi and other.lo <= self.hi


def euler_phi_truncated(x: Fraction, terms: int) -> Enclosure:
    """Enclosure of Euler's phi(x) = prod_{i>=1} (1 - x^i) for 0 < x < 1.

    The partial product P_T is an upper bound (factors are below 1); the tail
    satisfies prod_{i>T} (1 - x^i) >= 1 - x^(T+1)/(1-x), giving the lower end.
    """
    x = Fraction(x)
    if not 0 < x < 1:
        raise ValueError("need 0 < x < 1")
    if terms < 1:
        raise ValueError("need at least one factor")
    partial = Fraction(1)
    power = Fraction(1)
    for _ in range(terms):
        power *= x
        partial *= 1 - power
    tail_lo = max(Fraction(0), 1 - power * x / (1 - x))
    return Enclosure(partial * tail_lo, partial)


def euler_phi_pentagonal(x: Fraction, pairs: int) -> Enclosure:
    """Enclosure of phi(x) from the pentagonal-number series.

    phi(x) = 1 + sum_k (-1)^k (x^(k(3k-1)/2) + x^(k(3k+1)/2)); truncating
    after `pairs` values of k leaves a tail bounded by the geometric sum of
    the omitted exponents.
    """
    x = Fraction(x)
    if not 0 < x < 1:
        raise ValueError("need 0 < x < 1")
    if pairs < 1:
        raise ValueError("need at least one pair")
    partial = Fraction(1)
    for kk in range(1, pairs + 1):
        sign = -1 if kk % 2 else 1
        partial += sign * (x ** (kk * (3 * kk - 1) // 2) + x ** (kk * (3 * kk + 1) // 2))
    next_exp = (pairs + 1) * (3 * (pairs + 1) - 1) // 2
    tail = 2 * x**next_exp / (1 - x)
    return Enclosure(partial - tail, partial + tail)


# --- asymptotics --------------------------------------------------------------


def _alternating_factorial_sum(m: int) -> Fraction:
    return sum(Fraction((-1) ** i, factorial(i)) for i in range(m + 1))


@dataclass(frozen=True)
class QAsymptotics:
    """Exact limit of the density as q grows, with the decay order and the
    spectrum-free upper bound on the limsup for cross-checking."""

    limit: Fraction
    case: str  # "d=1" | "n=d=2" | "sparse"
    decay_order: str
    spectrum_free_bound: Fraction


def asymptotic_q_limit(n: int, m: int, d: int) -> QAsymptotics:
    """Density limit for q -> infinity: 1 when d = 1, the truncated
    alternating factorial series when n = d = 2, and 0 otherwise."""
    if not 2 <= n <= m:
        raise ValueError(f"need 2 <= n <= m, got n={n}, m={m}")
    if not 1 <= d <= n:
        raise ValueError(f"need 1 <= d <= n, got d={d}")
    exponent = (d - 1) * (n - d + 1)
    if d == 1:
        limit, case = Fraction(1), "d=1"
    elif n == d == 2:
        limit, case = _alternating_factorial_sum(m), "n=d=2"
    else:
        limit, case = Fraction(0), "sparse"
    return QAsymptotics(
        limit=limit,
        case=case,
        decay_order=f"O(q^{-exponent + 1})",
        spectrum_free_bound=_alternating_factorial_sum(m) ** exponent,
    )


@dataclass(frozen=True)
class MAsymptotics:
    """Certified enclosures of the two limsup bounds for m -> infinity,
    plus the partition-type constant bound (at most 1/2)."""

    antrobus: Enclosure
    common_complement: Enclosure
    partition_balanced: Fraction


def asymptotic_m_bounds(q: int, n: int, d: int, truncation: int) -> MAsymptotics:
    """Evaluates both limsup_{m} density bounds with certified truncation.

    The spectrum-free-style bound is phi(1/q)^(q(d-1)(n-d+1)+1); the
    common-complement bound is 1 / ([n d-1]_q (1/phi(1/q) - 1) + 1).  Both are
    monotone images of phi(1/q), so the enclosure of phi transports directly.
    """
    field_for_order(q)
    if d < 2:
        raise ValueError("bounds hold for all d >= 2")
    if not d <= n:
        raise ValueError("need d <= n")
    if truncation < 1:
        raise ValueError("need at least one factor")
    phi = euler_phi_truncated(Fraction(1, q), truncation)
    exponent = q * (d - 1) * (n - d + 1) + 1
    antrobus = Enclosure(phi.lo**exponent, phi.hi**exponent)
    c = q_binomial(n, d - 1, q)

    def cc_bound(phi_value: Fraction) -> Fraction:
        return 1 / (c * (1 / phi_value - 1) + 1)

    common = Enclosure(cc_bound(phi.lo), cc_bound(phi.hi))
    partition = Fraction((q - 1) * (q - 2) + 1, 2 * (q - 1) ** 2)
    return MAsymptotics(antrobus, common, partition)


# --- aggregate report ---------------------------------------------------------


@dataclass(frozen=True)
class DensityReport:
    """Everything known about the MRD density at one parameter set."""

    q: int
    n: int
    m: int
    d: int
    k: int
    exact: Fraction | None
    census: CensusResult | None
    bound_cc: Fraction
    bound_ball: Fraction
    asymptotic_q: QAsymptotics
    asymptotic_m: MAsymptotics | None


def density_report(
    q: int,
    n: int,
    m: int,
    d: int,
    want_exact: bool = False,
    truncation: int = 20,
    budget: int = DEFAULT_CENSUS_BUDGET,
) -> DensityReport:
    """Bounds, asymptotics, and (on request, within budget) the exact census."""
    _validate(q, n, m, d)
    census = density_census(q, n, m, d, budget) if want_exact else None
    bound_cc = density_bound_cc(q, n, m, d)
    bound_ball = density_bound_ball(q, n, m, d)
    report = DensityReport(
        q=q,
        n=n,
        m=m,
        d=d,
        k=m * (n - d + 1),
        exact=census.density if census else None,
        census=census,
        bound_cc=bound_cc,
        bound_ball=bound_ball,
        asymptotic_q=asymptotic_q_limit(n, m, d),
        asymptotic_m=asymptotic_m_bounds(q, n, d, truncation) if d >= 2 else None,
    )
    if report.exact is not None:
        assert 0 <= report.exact <= min(bound_cc, bound_ball) <= 1
    return report
