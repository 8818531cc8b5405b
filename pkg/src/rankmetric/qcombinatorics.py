"""Exact q-analog combinatorics: Gaussian binomials, subspace-lattice Moebius
coefficients, rank-ball sizes, and the pair-counting functions nu and theta.

Everything is computed in arbitrary-precision integer arithmetic; divisions
are exact by construction and verified.
"""

from __future__ import annotations

from math import comb


def _check_q(q: int) -> None:
    if not isinstance(q, int) or q < 2:
        raise ValueError(f"q must be an integer >= 2, got {q}")


def q_binomial(a: int, b: int, q: int) -> int:
    """Number of b-dimensional subspaces of GF(q)^a.

    Product formula prod_{i<b} (q^a - q^i)/(q^b - q^i); zero whenever a < 0,
    b < 0, or b > a.
    """
    _check_q(q)
    if a < 0 or b < 0 or b > a:
        return 0
    num = 1
    den = 1
    for i in range(b):
        num *= q**a - q**i
        den *= q**b - q**i
    assert num % den == 0
    return num // den


def q_binomial_identity_check(a: int, b: int, c: int, q: int) -> bool:
    """Truth of [a b][b c] == [a c][a-c a-b] (subspace chain double count)."""
    _check_q(q)
    if not 0 <= c <= b <= a:
        raise ValueError("need 0 <= c <= b <= a")
    lhs = q_binomial(a, b, q) * q_binomial(b, c, q)
    rhs = q_binomial(a, c, q) * q_binomial(a - c, a - b, q)
    return lhs == rhs


def moebius_coefficient(a: int, b: int, q: int) -> int:
    """Moebius function mu(A, B) = (-1)^(b-a) q^C(b-a,2) in the subspace lattice,

    for subspaces A <= B of dimensions a and b.
    """
    _check_q(q)
    if a < 0 or a > b:
        raise ValueError("need 0 <= a <= b")
    gap = b - a
    return (-1) ** gap * q ** comb(gap, 2)


def ball_size(n: int, m: int, r: int, q: int) -> int:
    """Number of n x m matrices over GF(q) of rank at most r."""
    _check_q(q)
    if not 0 <= r <= n <= m:
        raise ValueError("need 0 <= r <= n <= m")
    total = 0
    for i in range(r + 1):
        shell = q_binomial(n, i, q)
        for j in range(i):
            shell *= q**m - q**j
        total += shell
    return total


def nu(mn: int, k: int, ell: int, q: int) -> int:
    """Number of k-spaces of GF(q)^mn meeting both of two fixed (mn-k)-spaces
    A, B with dim(A intersect B) = ell, nontrivially.

    The closed form is only valid for mn-2k <= ell <= mn-k; outside that range
    the function raises rather than extrapolating.
    """
    _check_q(q)
    if not 0 <= k <= mn:
        raise ValueError("need 0 <= k <= mn")
    if not mn - 2 * k <= ell <= mn - k:
        raise ValueError(f"formula domain: need {mn - 2 * k} <= ell <= {mn - k}")
    total = q_binomial(mn, k, q)
    miss_one = q ** (k * (mn - k))
    tail = q ** ((2 * k - mn + ell) * (mn - k))
    for i in range(ell, mn - k):
        tail *= q ** (mn - k) - q**i
    return total - 2 * miss_one + tail


def theta(n: int, u: int, i: int, q: int) -> int:
    """Number of ordered pairs (U, U') of u-spaces in GF(q)^n with
    dim(U intersect U') = i."""
    _check_q(q)
    if not 0 <= u <= n:
        raise ValueError("need 0 <= u <= n")
    if i < 0 or i < 2 * u - n or i > u:
        raise ValueError(f"need max(0, {2 * u - n}) <= i <= {u}")
    total = 0
    for j in range(i, u + 1):
        term = (
            (-1) ** (j - i)
            * q ** comb(j - i, 2)
            * q_binomial(n, i, q)
            * q_binomial(n - i, j - i, q)
            * q_binomial(n - j, u - j, q) ** 2
        )
        total += term
    return total
