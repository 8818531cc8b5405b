"""Covering-radius bounds: the dual distance bound, the external distance
bound, the initial set bound, and the line-cover number lambda(S) they need.

The external distance is computed through the MacWilliams transform of the
primal distribution, never by enumerating the dual (whose dimension nm - k is
usually the large side).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .codes import (
    DEFAULT_BUDGET,
    EntrySet,
    RankMetricCode,
    covering_radius_exact,
    initial_set,
    minimum_distance,
    rank_distribution,
)
from .errors import BudgetExceededError
from .macwilliams import transform


def lambda_cover(S: EntrySet | Iterable[tuple[int, int]], a: int, b: int) -> int:
    """Minimum number of lines (rows or columns) covering S inside [a] x [b].

    Equals the maximum number of non-attacking rooks on S (Koenig-Egervary),
    computed here as a maximum bipartite matching by augmenting paths.
    Positions are 1-based.
    """
    positions = sorted(S.positions if isinstance(S, EntrySet) else {(i, j) for i, j in S})
    adjacency: dict[int, list[int]] = {}
    for i, j in positions:
        if not (1 <= i <= a and 1 <= j <= b):
            raise ValueError(f"position ({i}, {j}) out of range for [{a}] x [{b}]")
        adjacency.setdefault(i, []).append(j)

    match_col: dict[int, int] = {}

    def augment(row: int, seen: set[int]) -> bool:
        for col in adjacency.get(row, ()):
            if col in seen:
                continue
            seen.add(col)
            if col not in match_col or augment(match_col[col], seen):
                match_col[col] = row
                return True
        return False

    matched = 0
    for row in sorted(adjacency):
        if augment(row, set()):
            matched += 1
    return matched


def dual_distance_bound(C: RankMetricCode, budget: int = DEFAULT_BUDGET) -> int:
    """rho(C) <= n - d(dual) + 1; undefined for the ambient space (rho = 0).

    d(dual) is enumerated when the dual fits the budget; for MRD codes it
    falls back to the duality formula d(dual) = n - d + 2.
    """
    if C.is_ambient():
        raise ValueError("bound undefined; covering radius is 0")
    q = C.spec.order
    dual_size = q ** (C.n * C.m - C.dim)
    if dual_size <= budget:
        from .codes import dual as dual_code

        d_dual = minimum_distance(dual_code(C), budget)
    else:
        d = minimum_distance(C, budget)
        if C.m * (C.n - d + 1) != C.dim:
            raise BudgetExceededError("dual minimum distance enumeration", dual_size, budget)
        d_dual = C.n - d + 2
    return C.n - d_dual + 1


def external_distance_bound(C: RankMetricCode, budget: int = DEFAULT_BUDGET) -> int:
    """rho(C) <= s(C), the number of nonzero dual weights.

    s(C) is read from transform(W(C)); it never exceeds the dual distance
    bound.  For the ambient space s = 0, consistent with rho = 0.
    """
    W = rank_distribution(C, budget)
    Wdual = transform(W, C.n, C.m, C.spec.order)
    return sum(1 for i in range(1, C.n + 1) if Wdual[i] > 0)


def initial_set_bound(C: RankMetricCode, budget: int = DEFAULT_BUDGET) -> int:
    """rho(C) <= d - 1 + lambda(S) with S the unfilled part of the initial grid.

    S is the complement of in(C) inside [n-d+1] x [m]; undefined for the zero
    code.
    """
    if C.is_zero():
        raise ValueError("undefined for zero code")
    d = minimum_distance(C, budget)
    inC = initial_set(C)
    S = EntrySet.of(
        (i, j)
        for i in range(1, C.n - d + 2)
        for j in range(1, C.m + 1)
        if (i, j) not in inC
    )
    return d - 1 + lambda_cover(S, C.n - d + 1, C.m)


@dataclass(frozen=True)
class CoveringReport:
    """Exact covering radius (when affordable) next to all three upper bounds
    and the packing lower bound ceil((d-1)/2)."""

    exact: int | None
    dual_distance_bound: int
    external_distance_bound: int
    initial_set_bound: int
    lower_bound: int


def covering_report(C: RankMetricCode, budget: int = DEFAULT_BUDGET) -> CoveringReport:
    """All covering-radius information for a code, with invariants asserted.

    The ambient space reports exact 0 and the zero code exact n, using the
    convention d({0}) = n + 1 to keep every bound defined.
    """
    n = C.n
    if C.is_ambient():
        report = CoveringReport(0, 0, 0, 0, 0)
    elif C.is_zero():
        report = CoveringReport(n, n, n, n, (n + 1) // 2)
    else:
        d = minimum_distance(C, budget)
        try:
            exact = covering_radius_exact(C, budget)
        except BudgetExceededError:
            exact = None
        report = CoveringReport(
            exact,
            dual_distance_bound(C, budget),
            external_distance_bound(C, budget),
            initial_set_bound(C, budget),
            d // 2,
        )
    upper = min(
        report.dual_distance_bound,
        report.external_distance_bound,
        report.initial_set_bound,
    )
    assert report.external_distance_bound <= report.dual_distance_bound
    if report.exact is not None:
        assert report.lower_bound <= report.exact <= upper
    return report
