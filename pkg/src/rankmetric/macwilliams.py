"""Closed-form identities on rank distributions: the MacWilliams-type
transform, its binomial-moment form, the MRD distribution formula, and the
translate-distribution tail formula.

These operate on distributions, not codes, so the formulas can be tested
independently of enumeration.  All divisions must come out exact; a
non-integral intermediate means the input was not a genuine code
distribution and raises instead of rounding.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Sequence

from .codes import RankDistribution
from .qcombinatorics import q_binomial


def _counts(W: RankDistribution | Sequence[int], n: int) -> tuple[int, ...]:
    counts = tuple(int(c) for c in W)
    if len(counts) != n + 1:
        raise ValueError(f"distribution must have n+1 = {n + 1} entries")
    if any(c < 0 for c in counts):
        raise ValueError("distribution entries must be non-negative")
    return counts


def _code_size(counts: Sequence[int], q: int) -> int:
    size = sum(counts)
    v = size
    while v > 1 and v % q == 0:
        v //= q
    if v != 1:
        raise ValueError("not a code size")
    return size


def transform(
    W: RankDistribution | Sequence[int], n: int, m: int, q: int
) -> RankDistribution:
    """Rank distribution of the dual code, from the distribution alone.

    W_i(dual) = (1/|C|) sum_j W_j sum_{u=0}^{i} (-1)^{i-u} q^{mu + C(i-u,2)}
                [n-j u]_q [n-u i-u]_q,  exactly.  Involutive on genuine code
    distributions.
    """
    counts = _counts(W, n)
    size = _code_size(counts, q)
    out = []
    for i in range(n + 1):
        total = 0
        for j in range(n + 1):
            if counts[j] == 0:
                continue
            inner = 0
            for u in range(i + 1):
                inner += (
                    (-1) ** (i - u)
                    * q ** (m * u + comb(i - u, 2))
                    * q_binomial(n - j, u, q)
                    * q_binomial(n - u, i - u, q)
                )
            total += counts[j] * inner
        if total % size:
            raise ValueError("transform is not integral; input is not a code distribution")
        out.append(total // size)
    return RankDistribution(tuple(out))


def binomial_moment_check(
    W: RankDistribution | Sequence[int],
    Wdual: RankDistribution | Sequence[int],
    n: int,
    m: int,
    q: int,
    s: int,
) -> bool:
    """Truth of the s-th binomial-moment identity linking W and W(dual)."""
    if not 0 <= s <= n:
        raise ValueError("need 0 <= s <= n")
    counts = _counts(W, n)
    dual_counts = _counts(Wdual, n)
    size = _code_size(counts, q)
    lhs = sum(counts[j] * q_binomial(n - j, s, q) for j in range(n - s + 1))
    rhs = Fraction(size, q ** (m * s)) * sum(
        dual_counts[i] * q_binomial(n - i, s - i, q) for i in range(s + 1)
    )
    return Fraction(lhs) == rhs


def solve_dual_distribution_by_moments(
    W: RankDistribution | Sequence[int], n: int, m: int, q: int
) -> RankDistribution:
    """Dual distribution recovered by solving the triangular moment system.

    The moment identities for s = 0..n determine W(dual) uniquely (the
    coefficient of W_s(dual) in the s-th identity is 1); the result must agree
    with transform().
    """
    counts = _counts(W, n)
    size = _code_size(counts, q)
    dual: list[int] = []
    for s in range(n + 1):
        lhs = sum(counts[j] * q_binomial(n - j, s, q) for j in range(n - s + 1))
        rhs = Fraction(lhs * q ** (m * s), size)
        known = sum(dual[i] * q_binomial(n - i, s - i, q) for i in range(s))
        value = rhs - known
        if value.denominator != 1 or value < 0:
            raise ValueError("moment system is not integral; input is not a code distribution")
        dual.append(int(value))
    return RankDistribution(tuple(dual))


def mrd_distribution(n: int, m: int, d: int, q: int) -> RankDistribution:
    """The rank distribution shared by every MRD code with these parameters.

    W_0 = 1, W_i = 0 below the minimum distance, and for d <= i <= n the
    Moebius-inversion closed form; entries at and above d are positive and
    the total is q^{m(n-d+1)}.
    """
    if not 1 <= d <= n <= m:
        raise ValueError("need 1 <= d <= n <= m")
    if q < 2:
        raise ValueError("q must be >= 2")
    counts = [0] * (n + 1)
    counts[0] = 1
    for i in range(d, n + 1):
        total = 0
        nb = q_binomial(n, i, q)
        for u in range(d):
            total += (-1) ** (i - u) * q ** comb(i - u, 2) * nb * q_binomial(i, u, q)
        for u in range(d, i + 1):
            total += (
                (-1) ** (i - u)
                * q ** (comb(i - u, 2) + m * (u - d + 1))
                * nb
                * q_binomial(i, u, q)
            )
        counts[i] = total
    return RankDistribution(tuple(counts))


def translate_tail(
    W_lower: Sequence[int],
    n: int,
    m: int,
    q: int,
    code_size: int,
    d_dual: int,
    i: int,
) -> int:
    """W_i of a translate C + M from its low-rank prefix, for i > n - d_dual.

    `W_lower` must supply W_j(C + M) for j = 0..n-d_dual; `d_dual` is the
    minimum distance of the dual code and `code_size` is |C|.  Both halves of
    the formula carry the Moebius weight (-1)^{i-k} q^C(i-k,2) [n-k i-k]_q;
    for k > n - d_dual the inner sum collapses to [n k]_q |C| / q^{m(n-k)}.
    """
    cutoff = n - d_dual
    if not cutoff + 1 <= i <= n:
        raise ValueError(f"need {cutoff + 1} <= i <= {n}")
    if len(W_lower) < cutoff + 1:
        raise ValueError(f"need W_j for j = 0..{cutoff}")
    total = Fraction(0)
    for k in range(i + 1):
        weight = (
            (-1) ** (i - k) * q ** comb(i - k, 2) * q_binomial(n - k, i - k, q)
        )
        if weight == 0:
            continue
        if k <= cutoff:
            inner = Fraction(
                sum(int(W_lower[j]) * q_binomial(n - j, k - j, q) for j in range(k + 1))
            )
        else:
            inner = Fraction(q_binomial(n, k, q) * code_size, q ** (m * (n - k)))
        total += weight * inner
    if total.denominator != 1 or total < 0:
        raise ValueError("translate formula is not integral; inputs are inconsistent")
    return int(total)
