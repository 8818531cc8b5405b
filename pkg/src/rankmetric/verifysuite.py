"""Cross-oracle verification suite behind the `verify` CLI subcommand.

Every closed form in the library is checked here against an independent
brute-force computation: the MacWilliams transform against dual enumeration,
the covering bounds against exhaustive coset search, the MRD distribution
formula against enumerated constructions, the density census against both of
its counting oracles, and nu/theta against exhaustive subspace-pair counts.

`level` selects scope: "desk" samples (seeded, reproducible), "exhaustive"
sweeps every subspace of the small ambient spaces.  A failing check carries a
counterexample: the offending code is dumped as a valid code file.
"""

from __future__ import annotations

import os
import random
from dataclasses import dataclass

from . import macwilliams as mw
from .codefile import write_code_file
from .codes import (
    RankMetricCode,
    covering_radius_exact,
    dual,
    from_generators,
    rank_distribution,
)
from .constructions import build_mrd
from .covering import covering_report
from .density import density_census
from .fields import FieldSpec, make_field
from .matrices import MatrixOverFq, enumerate_subspaces
from .qcombinatorics import nu, q_binomial, theta

LEVELS = ("desk", "exhaustive")


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str
    counterexample: str | None = None


def _dump(C: RankMetricCode, name: str) -> str:
    path = os.path.join(os.getcwd(), f"counterexample-{name}.rankcode")
    write_code_file(C, path, comments=[f"counterexample for check {name}"])
    return path


def _all_codes_of_ambient(spec: FieldSpec, n: int, m: int):
    """Every subspace of GF(q)^{n x m}, as codes (canonical bases line up)."""
    for k in range(n * m + 1):
        for U in enumerate_subspaces(n * m, k, spec):
            basis = tuple(MatrixOverFq.from_vector(spec, n, m, row) for row in U.basis)
            yield RankMetricCode(spec, n, m, basis)


def _random_code(rng: random.Random, spec: FieldSpec, n: int, m: int) -> RankMetricCode:
    k = rng.randint(0, n * m)
    gens = []
    for _ in range(k):
        rows = [[spec.from_int(rng.randrange(spec.order)) for _ in range(m)] for _ in range(n)]
        gens.append(MatrixOverFq.from_rows(spec, rows))
    return from_generators(spec, n, m, gens)


def check_macwilliams_worked_example() -> CheckResult:
    name = "macwilliams-worked-example"
    F3 = make_field(3, 1)
    g1 = MatrixOverFq.from_rows(F3, [[0, 0, 1], [2, 0, 0], [0, 0, 0]])
    g2 = MatrixOverFq.from_rows(F3, [[2, 0, 0], [1, 2, 1], [1, 0, 2]])
    C = from_generators(F3, 3, 3, [g1, g2])
    W = rank_distribution(C)
    expected_W = (1, 0, 4, 4)
    expected_dual = (1, 38, 888, 1260)
    got_dual = tuple(mw.transform(W, 3, 3, 3))
    if tuple(W) != expected_W or got_dual != expected_dual:
        return CheckResult(
            name,
            False,
            f"W={tuple(W)} (expected {expected_W}), transform={got_dual} (expected {expected_dual})",
            _dump(C, name),
        )
    return CheckResult(name, True, f"W={expected_W} -> dual {expected_dual}")


def check_macwilliams_vs_bruteforce(level: str) -> CheckResult:
    name = "macwilliams-vs-bruteforce"
    cases = []
    if level == "exhaustive":
        cases.extend(_all_codes_of_ambient(make_field(2, 1), 2, 2))
    else:
        rng = random.Random(20260810)
        F2, F3 = make_field(2, 1), make_field(3, 1)
        cases.extend(_random_code(rng, F2, 2, 3) for _ in range(20))
        cases.extend(_random_code(rng, F3, 2, 2) for _ in range(10))
    count = 0
    for C in cases:
        W = rank_distribution(C)
        predicted = mw.transform(W, C.n, C.m, C.spec.order)
        brute = rank_distribution(dual(C))
        round_trip = mw.transform(predicted, C.n, C.m, C.spec.order)
        if tuple(predicted) != tuple(brute) or tuple(round_trip) != tuple(W):
            return CheckResult(
                name,
                False,
                f"transform {tuple(predicted)} vs enumerated dual {tuple(brute)}",
                _dump(C, name),
            )
        count += 1
    return CheckResult(name, True, f"{count} codes, transform == enumerated dual, involution holds")


def check_covering_bounds(level: str) -> CheckResult:
    name = "covering-bounds-vs-exact"
    F2 = make_field(2, 1)
    cases: list[RankMetricCode] = []
    if level == "exhaustive":
        cases.extend(_all_codes_of_ambient(F2, 2, 2))
    else:
        rng = random.Random(4218)
        cases.extend(_random_code(rng, F2, 2, 3) for _ in range(15))
    exrem = from_generators(
        F2,
        2,
        3,
        [
            MatrixOverFq.from_rows(F2, [[1, 0, 1], [0, 1, 1]]),
            MatrixOverFq.from_rows(F2, [[1, 1, 1], [1, 0, 1]]),
            MatrixOverFq.from_rows(F2, [[0, 1, 1], [1, 0, 0]]),
        ],
    )
    cases.append(exrem)
    count = 0
    for C in cases:
        report = covering_report(C)
        upper = min(
            report.dual_distance_bound,
            report.external_distance_bound,
            report.initial_set_bound,
        )
        exact = covering_radius_exact(C)
        if report.exact != exact or not report.lower_bound <= exact <= upper:
            return CheckResult(
                name,
                False,
                f"exact {exact} outside [{report.lower_bound}, {upper}]",
                _dump(C, name),
            )
        count += 1
    rep = covering_report(exrem)
    bounds = (rep.dual_distance_bound, rep.external_distance_bound, rep.initial_set_bound)
    if bounds != (1, 1, 1) or rep.exact != 1:
        return CheckResult(name, False, f"reference code bounds {bounds}, exact {rep.exact}", _dump(exrem, name))
    return CheckResult(name, True, f"{count} codes, lower <= exact <= min(bounds)")


def check_mrd_distribution(level: str) -> CheckResult:
    name = "mrd-distribution-vs-enumeration"
    top = 3 if level == "exhaustive" else 2
    count = 0
    for q in (2, 3):
        spec = make_field(q, 1)
        for m in range(1, top + 1):
            for n in range(1, m + 1):
                for d in range(1, n + 1):
                    C = build_mrd(spec, n, m, d)
                    got = tuple(rank_distribution(C))
                    want = tuple(mw.mrd_distribution(n, m, d, q))
                    if got != want:
                        return CheckResult(
                            name,
                            False,
                            f"(q={q},n={n},m={m},d={d}): enumerated {got}, formula {want}",
                            _dump(C, name),
                        )
                    count += 1
    return CheckResult(name, True, f"{count} constructed codes match the closed form")


def check_census_double_oracle(level: str) -> CheckResult:
    name = "census-double-oracle"
    params = [(2, 2, 2, 2)]
    if level == "exhaustive":
        params.append((2, 2, 3, 2))
    details = []
    for q, n, m, d in params:
        census = density_census(q, n, m, d)
        if not (
            census.min_distance_exactly_d
            == census.ball_avoiding
            == census.common_complement
        ):
            return CheckResult(
                name,
                False,
                f"{(q, n, m, d)}: counts diverge: {census}",
            )
        details.append(f"{(q, n, m, d)}: {census.min_distance_exactly_d}/{census.total_subspaces}")
    return CheckResult(name, True, "; ".join(details))


def check_nu_theta_bruteforce(level: str) -> CheckResult:
    name = "nu-theta-vs-bruteforce"
    q = 2
    spec = make_field(q, 1)
    top = 4 if level == "exhaustive" else 3
    checked = 0
    for ambient in range(1, top + 1):
        subspaces_by_dim = {
            u: list(enumerate_subspaces(ambient, u, spec)) for u in range(ambient + 1)
        }
        # theta: ordered pairs of u-spaces by intersection dimension
        for u in range(ambient + 1):
            spaces = subspaces_by_dim[u]
            hist = {}
            for U in spaces:
                for V in spaces:
                    i = U.intersect(V).dim
                    hist[i] = hist.get(i, 0) + 1
            for i in range(max(0, 2 * u - ambient), u + 1):
                expected = hist.get(i, 0)
                if theta(ambient, u, i, q) != expected:
                    return CheckResult(
                        name, False, f"theta({ambient},{u},{i},{q}) != brute {expected}"
                    )
                checked += 1
            if sum(hist.values()) != q_binomial(ambient, u, q) ** 2:
                return CheckResult(name, False, f"theta total mismatch at n={ambient}, u={u}")
        # nu: k-spaces meeting two (ambient-k)-spaces with prescribed intersection
        for k in range(ambient + 1):
            big = subspaces_by_dim[ambient - k]
            for ell in range(max(0, ambient - 2 * k), ambient - k + 1):
                pair = None
                for A in big:
                    for B in big:
                        if A.intersect(B).dim == ell:
                            pair = (A, B)
                            break
                    if pair:
                        break
                if pair is None:
                    continue
                A, B = pair
                brute = sum(
                    1
                    for W in subspaces_by_dim[k]
                    if W.intersect(A).dim > 0 and W.intersect(B).dim > 0
                )
                if nu(ambient, k, ell, q) != brute:
                    return CheckResult(
                        name, False, f"nu({ambient},{k},{ell},{q}) != brute {brute}"
                    )
                checked += 1
    return CheckResult(name, True, f"{checked} instances match brute force")


def run_checks(level: str = "desk") -> list[CheckResult]:
    if level not in LEVELS:
        raise ValueError(f"level must be one of {LEVELS}")
    checks = [
        ("macwilliams-worked-example", lambda: check_macwilliams_worked_example()),
        ("macwilliams-vs-bruteforce", lambda: check_macwilliams_vs_bruteforce(level)),
        ("covering-bounds-vs-exact", lambda: check_covering_bounds(level)),
        ("mrd-distribution-vs-enumeration", lambda: check_mrd_distribution(level)),
        ("census-double-oracle", lambda: check_census_double_oracle(level)),
        ("nu-theta-vs-bruteforce", lambda: check_nu_theta_bruteforce(level)),
    ]
    results = []
    for name, fn in checks:
        try:
            results.append(fn())
        except Exception as exc:  # a crashing check is a failing check
            results.append(CheckResult(name, False, f"crashed: {exc!r}"))
    return results
