"""Acceptance gate: every release-blocking criterion as one test.

Each test pins exact expected values (hand-checked or computed by the
definition-direct oracles in conftest) at the full documented scale, checks
the stated runtime envelope where one applies, and prints a one-line
pass marker.  Run with `pytest tests/test_acceptance.py -v -s`.
"""

import random
import time
from fractions import Fraction
from math import comb

from rankmetric import (
    EntrySet,
    asymptotic_m_bounds,
    asymptotic_q_limit,
    build_column_anticode,
    build_mrd,
    covering_radius_exact,
    covering_report,
    density_bound_ball,
    density_bound_cc,
    density_census,
    dual,
    enumerate_subspaces,
    euler_phi_truncated,
    from_generators,
    initial_set,
    is_mrd,
    is_optimal_anticode,
    lambda_cover,
    make_field,
    maximum_rank,
    minimum_distance,
    mrd_distribution,
    nu,
    orthogonal_subspace,
    q_binomial,
    rank_distribution,
    shorten,
    solve_dual_distribution_by_moments,
    theta,
    transform,
    translate_rank_distribution,
    translate_tail,
)

from conftest import (
    all_codes,
    brute_dual_distribution,
    brute_min_line_cover,
    random_code,
    random_matrix,
)


def test_criterion_01_macwilliams_worked_example(macwilliams_example_code):
    start = time.monotonic()
    C = macwilliams_example_code
    W = rank_distribution(C)
    assert tuple(W) == (1, 0, 4, 4)
    Wd = transform(W, 3, 3, 3)
    assert tuple(Wd) == (1, 38, 888, 1260)
    assert tuple(solve_dual_distribution_by_moments(W, 3, 3, 3)) == (1, 38, 888, 1260)

    # the displayed top-weight computation, including its inner sums
    def inner(j):
        return sum(
            (-1) ** (3 - u) * 3 ** (3 * u + comb(3 - u, 2)) * q_binomial(3 - j, u, 3)
            for u in range(4)
        )

    assert inner(0) == -27 + 1053 - 9477 + 19683
    assert inner(2) == -27 + 81
    assert inner(3) == -27
    assert (1 * inner(0) + 4 * inner(2) + 4 * inner(3)) // 9 == 1260
    elapsed = time.monotonic() - start
    assert elapsed < 1.0
    print(f"criterion 1: PASS (worked example exact, {elapsed:.3f}s)")


def test_criterion_02_involution_and_exhaustive_duality(F2):
    start = time.monotonic()
    count = 0
    for C in all_codes(F2, 2, 2):
        W = rank_distribution(C)
        predicted = transform(W, 2, 2, 2)
        assert tuple(predicted) == brute_dual_distribution(C)
        assert tuple(transform(predicted, 2, 2, 2)) == tuple(W)
        count += 1
    assert count == 67  # sum of [4 k]_2 = 1 + 15 + 35 + 15 + 1
    elapsed = time.monotonic() - start
    assert elapsed < 10.0
    print(f"criterion 2: PASS ({count} subspaces, involution + duality, {elapsed:.3f}s)")


def test_criterion_03_mrd_construction_grid():
    start = time.monotonic()
    count = 0
    for q in (2, 3):
        spec = make_field(q, 1)
        for m in (1, 2, 3):
            for n in range(1, m + 1):
                for d in range(1, n + 1):
                    C = build_mrd(spec, n, m, d)
                    assert C.dim == m * (n - d + 1)
                    assert is_mrd(C)
                    assert minimum_distance(C) == d
                    assert minimum_distance(dual(C)) == n - d + 2
                    assert tuple(rank_distribution(C)) == tuple(
                        mrd_distribution(n, m, d, q)
                    )
                    count += 1
    # spot value from the parameter list: (q,n,m,d) = (3,2,3,2)
    assert tuple(mrd_distribution(2, 3, 2, 3)) == (1, 0, 26)
    elapsed = time.monotonic() - start
    assert elapsed < 60.0
    print(f"criterion 3: PASS ({count} parameter sets, {elapsed:.3f}s)")


def test_criterion_04_mrd_shortening_law():
    start = time.monotonic()
    count = 0
    for q in (2, 3):
        spec = make_field(q, 1)
        for m in (1, 2, 3):
            for n in range(1, m + 1):
                for d in range(1, n + 1):
                    C = build_mrd(spec, n, m, d)
                    for u in range(d - 1, n + 1):
                        for U in enumerate_subspaces(n, u, spec):
                            assert shorten(C, U).size == q ** (m * (u - d + 1))
                            count += 1
    elapsed = time.monotonic() - start
    print(f"criterion 4: PASS ({count} shortenings, {elapsed:.3f}s)")


def test_criterion_05_covering_radius(F2, exrem_code, coverbound_code):
    start = time.monotonic()
    rep = covering_report(exrem_code)
    assert (
        rep.dual_distance_bound,
        rep.external_distance_bound,
        rep.initial_set_bound,
    ) == (1, 1, 1)
    assert rep.exact == 1 and covering_radius_exact(exrem_code) == 1
    rep = covering_report(coverbound_code)
    assert (
        rep.dual_distance_bound,
        rep.external_distance_bound,
        rep.initial_set_bound,
    ) == (3, 3, 2)
    count = 0
    for C in all_codes(F2, 2, 2):
        rep = covering_report(C)
        rho = covering_radius_exact(C)
        assert rep.exact == rho
        assert rep.lower_bound <= rho <= min(
            rep.dual_distance_bound,
            rep.external_distance_bound,
            rep.initial_set_bound,
        )
        count += 1
    elapsed = time.monotonic() - start
    assert elapsed < 30.0
    print(f"criterion 5: PASS (2 reference codes + {count} exhaustive, {elapsed:.3f}s)")


def test_criterion_06_translate_formula(F2):
    start = time.monotonic()
    rng = random.Random(20260810)
    checked = 0
    for idx in range(50):
        C = random_code(rng, F2, 2, 3, dim=1 + idx % 4)
        d_dual = minimum_distance(dual(C))
        cutoff = 2 - d_dual
        for _ in range(10):
            M = random_matrix(rng, F2, 2, 3)
            W = tuple(translate_rank_distribution(C, M))
            prefix = W[: cutoff + 1]
            for i in range(cutoff + 1, 3):
                assert translate_tail(prefix, 2, 3, 2, C.size, d_dual, i) == W[i]
                checked += 1
    elapsed = time.monotonic() - start
    print(f"criterion 6: PASS (50 codes x 10 translates, {checked} tail values, {elapsed:.3f}s)")


def test_criterion_07_anticode_suite(F2, F3):
    start = time.monotonic()
    anticodes = 0
    for spec in (F2, F3):
        for m in (1, 2, 3):
            for n in range(1, m + 1):
                for u in range(n + 1):
                    for U in enumerate_subspaces(n, u, spec):
                        C = build_column_anticode(U, m)
                        assert C.dim == m * u == m * maximum_rank(C)
                        result = is_optimal_anticode(C)
                        assert result.is_optimal
                        if result.side == "column":
                            assert result.support == U
                        assert dual(C) == build_column_anticode(
                            orthogonal_subspace(U), m
                        )
                        anticodes += 1
    rng = random.Random(777)
    meshulam = 0
    shapes = ((F2, 2, 3), (F2, 3, 3), (F3, 2, 2), (F3, 2, 3))
    while meshulam < 200:
        spec, n, m = shapes[meshulam % len(shapes)]
        C = random_code(rng, spec, n, m)
        if C.is_zero():
            continue
        lam = lambda_cover(initial_set(C), n, m)
        assert maximum_rank(C) >= lam
        meshulam += 1
    elapsed = time.monotonic() - start
    print(f"criterion 7: PASS ({anticodes} anticodes, {meshulam} Meshulam checks, {elapsed:.3f}s)")


def test_criterion_08_lambda_oracle():
    start = time.monotonic()
    exhaustive = 0
    for a in range(1, 4):
        for b in range(1, 4):
            cells = [(i, j) for i in range(1, a + 1) for j in range(1, b + 1)]
            for mask in range(1 << len(cells)):
                S = {cells[t] for t in range(len(cells)) if mask >> t & 1}
                assert lambda_cover(EntrySet.of(S), a, b) == brute_min_line_cover(S, a, b)
                exhaustive += 1
    rng = random.Random(88)
    cells5 = [(i, j) for i in range(1, 6) for j in range(1, 6)]
    for _ in range(200):
        S = {c for c in cells5 if rng.random() < rng.choice((0.15, 0.3, 0.5))}
        assert lambda_cover(S, 5, 5) == brute_min_line_cover(S, 5, 5)
    elapsed = time.monotonic() - start
    print(f"criterion 8: PASS ({exhaustive} exhaustive + 200 random 5x5, {elapsed:.3f}s)")


def test_criterion_09_density_census():
    start = time.monotonic()
    census = density_census(2, 2, 2, 2)
    assert census.total_subspaces == 35
    assert (
        census.min_distance_exactly_d
        == census.ball_avoiding
        == census.common_complement
        == 2
    )
    exact = census.density
    assert exact == Fraction(2, 35)
    assert exact <= density_bound_cc(2, 2, 2, 2)
    assert exact <= density_bound_ball(2, 2, 2, 2)
    limit = asymptotic_q_limit(2, 2, 2)
    assert limit.limit == Fraction(1, 2)
    from math import factorial

    assert limit.limit == sum(Fraction((-1) ** i, factorial(i)) for i in range(3))
    elapsed = time.monotonic() - start
    assert elapsed < 5.0
    print(f"criterion 9: PASS (census 2/35, bounds dominate, q-limit 1/2, {elapsed:.3f}s)")


def test_criterion_10_nu_theta_bruteforce(F2):
    start = time.monotonic()

    def vector_sets(ambient, dim):
        return [frozenset(U.vectors()) for U in enumerate_subspaces(ambient, dim, F2)]

    checked = 0
    for ambient in (1, 2, 3, 4):
        by_dim = {u: vector_sets(ambient, u) for u in range(ambient + 1)}
        for u in range(ambient + 1):
            spaces = by_dim[u]
            hist = {}
            for U in spaces:
                for V in spaces:
                    i = (len(U & V) - 1).bit_length()
                    hist[i] = hist.get(i, 0) + 1
            for i in range(max(0, 2 * u - ambient), u + 1):
                assert theta(ambient, u, i, 2) == hist.get(i, 0)
                checked += 1
            assert sum(hist.values()) == q_binomial(ambient, u, 2) ** 2
        for k in range(ambient + 1):
            big = by_dim[ambient - k]
            for ell in range(max(0, ambient - 2 * k), ambient - k + 1):
                target = 2**ell
                pair = next(
                    ((A, B) for A in big for B in big if len(A & B) == target), None
                )
                if pair is None:
                    continue
                A, B = pair
                brute = sum(
                    1 for W in by_dim[k] if len(W & A) > 1 and len(W & B) > 1
                )
                assert nu(ambient, k, ell, 2) == brute
                checked += 1
    elapsed = time.monotonic() - start
    print(f"criterion 10: PASS ({checked} nu/theta instances, {elapsed:.3f}s)")


def test_criterion_11_enclosures_shrink_monotonically():
    """The out-of-reach limits are replaced by certified enclosures; their
    widths must shrink monotonically with the truncation order."""
    start = time.monotonic()
    widths = [euler_phi_truncated(Fraction(1, 2), T).width for T in (5, 10, 20, 40)]
    assert all(a > b for a, b in zip(widths, widths[1:]))
    for q, n, d in ((2, 3, 2), (3, 3, 3), (2, 2, 2)):
        ab = [asymptotic_m_bounds(q, n, d, T) for T in (5, 10, 20, 40)]
        aw = [b.antrobus.width for b in ab]
        cw = [b.common_complement.width for b in ab]
        assert all(x > y for x, y in zip(aw, aw[1:]))
        assert all(x > y for x, y in zip(cw, cw[1:]))
        # nested: later enclosures sit inside earlier ones
        for prev, cur in zip(ab, ab[1:]):
            assert prev.antrobus.lo <= cur.antrobus.lo <= cur.antrobus.hi <= prev.antrobus.hi
    elapsed = time.monotonic() - start
    print(f"criterion 11: PASS (enclosure widths strictly decrease, {elapsed:.3f}s)")
