import random
from itertools import product

import pytest

from rankmetric import (
    EntrySet,
    ambient_code,
    build_mrd,
    covering_radius_exact,
    covering_report,
    dual,
    dual_distance_bound,
    external_distance_bound,
    from_generators,
    initial_set_bound,
    lambda_cover,
    minimum_distance,
)

from conftest import brute_max_rooks, brute_min_line_cover, random_code


def test_lambda_cover_empty():
    assert lambda_cover(EntrySet.of([]), 3, 3) == 0


def test_lambda_cover_single_row_example():
    # {(2,1), (2,2), (2,3)} in [2] x [3] is covered by one row
    assert lambda_cover({(2, 1), (2, 2), (2, 3)}, 2, 3) == 1


def test_lambda_cover_diagonal():
    for r in range(1, 5):
        S = {(i, i) for i in range(1, r + 1)}
        assert lambda_cover(S, 4, 4) == r == brute_min_line_cover(S, 4, 4)


def test_lambda_cover_out_of_range():
    with pytest.raises(ValueError, match="out of range"):
        lambda_cover({(3, 1)}, 2, 3)
    with pytest.raises(ValueError, match="out of range"):
        lambda_cover({(0, 1)}, 2, 3)


def test_lambda_cover_exhaustive_small_grids():
    """Minimum line cover and maximum rook placement agree with brute force on
    every subset of every grid up to 3x3."""
    for a in range(1, 4):
        for b in range(1, 4):
            cells = [(i, j) for i in range(1, a + 1) for j in range(1, b + 1)]
            for mask in range(1 << len(cells)):
                S = {cells[t] for t in range(len(cells)) if mask >> t & 1}
                got = lambda_cover(S, a, b)
                assert got == brute_min_line_cover(S, a, b)
                assert got == brute_max_rooks(S)


def test_lambda_cover_random_5x5():
    rng = random.Random(227)
    cells = [(i, j) for i in range(1, 6) for j in range(1, 6)]
    for _ in range(60):
        S = {c for c in cells if rng.random() < 0.3}
        got = lambda_cover(S, 5, 5)
        assert got == brute_min_line_cover(S, 5, 5)
        assert got == brute_max_rooks(S)


def test_bounds_on_reference_code_all_equal_one(exrem_code):
    assert dual_distance_bound(exrem_code) == 1
    assert external_distance_bound(exrem_code) == 1
    assert initial_set_bound(exrem_code) == 1
    assert covering_radius_exact(exrem_code) == 1


def test_bounds_on_initial_set_showcase(coverbound_code):
    C = coverbound_code
    assert minimum_distance(C) == 2
    assert external_distance_bound(C) == 3
    assert dual_distance_bound(C) == 3
    assert initial_set_bound(C) == 2  # d - 1 + lambda({(2,1),(2,2),(2,3)}) = 1 + 1


def test_dual_distance_bound_rejects_ambient(F2):
    with pytest.raises(ValueError, match="covering radius is 0"):
        dual_distance_bound(ambient_code(F2, 2, 2))


def test_dual_distance_bound_mrd_shortcut(F2):
    """With the dual too large to enumerate, the MRD duality formula kicks in."""
    C = build_mrd(F2, 3, 3, 3)  # 8 words, dual has 64
    full = dual_distance_bound(C)
    forced = dual_distance_bound(C, budget=32)  # dual blocked, primal fits
    assert full == forced == 3 - 2 + 1  # d_dual = n - d + 2 = 2


def test_external_distance_of_ambient_is_zero(F2):
    assert external_distance_bound(ambient_code(F2, 2, 3)) == 0


def test_external_bound_never_beats_dual_bound(F2, F3):
    rng = random.Random(229)
    for spec, n, m in ((F2, 2, 3), (F3, 2, 2)):
        for _ in range(15):
            C = random_code(rng, spec, n, m)
            if C.is_ambient():
                continue
            assert external_distance_bound(C) <= dual_distance_bound(C)


def test_initial_set_bound_rejects_zero_code(F2):
    with pytest.raises(ValueError, match="zero code"):
        initial_set_bound(from_generators(F2, 2, 3, []))


def test_initial_set_bound_of_ambient_is_zero(F2):
    # in(C) fills [n] x [m], d = 1, so S is empty and the bound is 0.
    assert initial_set_bound(ambient_code(F2, 2, 2)) == 0


def test_covering_report_reference_codes(exrem_code, coverbound_code):
    rep = covering_report(exrem_code)
    assert (rep.exact, rep.dual_distance_bound, rep.external_distance_bound,
            rep.initial_set_bound) == (1, 1, 1, 1)
    rep = covering_report(coverbound_code)
    assert (rep.dual_distance_bound, rep.external_distance_bound,
            rep.initial_set_bound) == (3, 3, 2)
    assert rep.exact == 2


def test_covering_report_ambient_and_zero(F2):
    rep = covering_report(ambient_code(F2, 2, 3))
    assert rep.exact == 0
    rep = covering_report(from_generators(F2, 2, 3, []))
    assert rep.exact == 2
    assert rep.dual_distance_bound == rep.external_distance_bound == 2


def test_covering_invariants_exhaustive_2x2(F2):
    from conftest import all_codes

    for C in all_codes(F2, 2, 2):
        rep = covering_report(C)
        exact = covering_radius_exact(C)
        assert rep.exact == exact
        upper = min(
            rep.dual_distance_bound, rep.external_distance_bound, rep.initial_set_bound
        )
        assert rep.lower_bound <= exact <= upper
        assert rep.external_distance_bound <= rep.dual_distance_bound


def test_covering_invariants_random_2x3(F2):
    rng = random.Random(233)
    for _ in range(25):
        C = random_code(rng, F2, 2, 3)
        rep = covering_report(C)
        assert rep.exact == covering_radius_exact(C)
        assert rep.lower_bound <= rep.exact
        assert rep.exact <= min(
            rep.dual_distance_bound, rep.external_distance_bound, rep.initial_set_bound
        )


def test_meshulam_lower_bound_on_max_rank(F2, F3):
    """Some codeword has rank at least lambda(in(C))."""
    from rankmetric import initial_set, maximum_rank

    rng = random.Random(239)
    for spec, n, m in ((F2, 2, 3), (F3, 2, 2), (F2, 3, 3)):
        for _ in range(20):
            C = random_code(rng, spec, n, m)
            if C.is_zero():
                continue
            lam = lambda_cover(initial_set(C), n, m)
            assert maximum_rank(C) >= lam
