"""Shared fixtures and definition-direct brute-force oracles.

The oracles here deliberately avoid the library's closed forms and clever
paths: spans are closed by enumerating coefficient combinations, ranks come
from span sizes, covering radii from scanning every ambient matrix, dual
distributions from filtering the whole matrix space against the trace
product, and line covers from trying every subset of lines.
"""

from __future__ import annotations

import random
from itertools import combinations, product

import pytest

from rankmetric import (
    FieldSpec,
    MatrixOverFq,
    RankMetricCode,
    from_generators,
    make_field,
    trace_product,
)
from rankmetric.matrices import enumerate_subspaces


@pytest.fixture(scope="session")
def F2() -> FieldSpec:
    return make_field(2, 1)


@pytest.fixture(scope="session")
def F3() -> FieldSpec:
    return make_field(3, 1)


@pytest.fixture(scope="session")
def F4() -> FieldSpec:
    return make_field(2, 2)


def mat(spec: FieldSpec, rows) -> MatrixOverFq:
    return MatrixOverFq.from_rows(spec, rows)


# --- worked example codes -----------------------------------------------------


@pytest.fixture(scope="session")
def dim2_example_code(F2) -> RankMetricCode:
    """The 2-dimensional code of F_2^{2x2} whose 3 nonzero words are invertible."""
    return from_generators(F2, 2, 2, [mat(F2, [[0, 1], [1, 1]]), mat(F2, [[1, 1], [1, 0]])])


@pytest.fixture(scope="session")
def macwilliams_example_code(F3) -> RankMetricCode:
    """q=3, n=m=3, dimension 2, rank distribution (1, 0, 4, 4)."""
    return from_generators(
        F3,
        3,
        3,
        [mat(F3, [[0, 0, 1], [2, 0, 0], [0, 0, 0]]), mat(F3, [[2, 0, 0], [1, 2, 1], [1, 0, 2]])],
    )


@pytest.fixture(scope="session")
def mrd_example_code(F3) -> RankMetricCode:
    """q=3, n=2, m=3 MRD code: all nonzero words have rank 2."""
    return from_generators(
        F3,
        2,
        3,
        [
            mat(F3, [[1, 0, 0], [0, 1, 0]]),
            mat(F3, [[0, 1, 0], [0, 0, 1]]),
            mat(F3, [[0, 0, 1], [1, 0, 2]]),
        ],
    )


@pytest.fixture(scope="session")
def exrem_code(F2) -> RankMetricCode:
    """F_2^{2x3} code where all three covering bounds equal 1."""
    return from_generators(
        F2,
        2,
        3,
        [
            mat(F2, [[1, 0, 1], [0, 1, 1]]),
            mat(F2, [[1, 1, 1], [1, 0, 1]]),
            mat(F2, [[0, 1, 1], [1, 0, 0]]),
        ],
    )


@pytest.fixture(scope="session")
def coverbound_code(F2) -> RankMetricCode:
    """F_2^{3x3} code where the initial set bound (2) beats the other two (3)."""
    return from_generators(
        F2,
        3,
        3,
        [
            mat(F2, [[1, 0, 0], [0, 1, 0], [0, 0, 0]]),
            mat(F2, [[0, 1, 0], [0, 0, 1], [0, 0, 0]]),
            mat(F2, [[0, 0, 1], [0, 0, 0], [1, 0, 0]]),
        ],
    )


# --- brute-force oracles --------------------------------------------------


def span_set(spec: FieldSpec, vectors, width: int | None = None) -> frozenset:
    """All GF(q)-combinations of the given vectors, as coefficient tuples."""
    vectors = [tuple(v) for v in vectors]
    elems = list(spec.elements())
    if width is None:
        width = len(vectors[0]) if vectors else 0
    out = set()
    for coeffs in product(elems, repeat=len(vectors)):
        acc = [spec.zero()] * width
        for lam, vec in zip(coeffs, vectors):
            if not lam.is_zero():
                acc = [a + lam * b for a, b in zip(acc, vec)]
        out.add(tuple(acc))
    return frozenset(out)


def brute_rank(X: MatrixOverFq) -> int:
    """Rank as log_q of the row-span size."""
    size = len(span_set(X.spec, X.entries))
    r = 0
    while X.spec.order**r < size:
        r += 1
    assert X.spec.order**r == size
    return r


def all_matrices(spec: FieldSpec, n: int, m: int):
    for entries in product(spec.elements(), repeat=n * m):
        yield MatrixOverFq.from_vector(spec, n, m, entries)


def all_codes(spec: FieldSpec, n: int, m: int):
    """Every subspace of GF(q)^{n x m} as a code."""
    for k in range(n * m + 1):
        for U in enumerate_subspaces(n * m, k, spec):
            basis = tuple(MatrixOverFq.from_vector(spec, n, m, row) for row in U.basis)
            yield RankMetricCode(spec, n, m, basis)


def brute_codewords(C: RankMetricCode) -> set:
    vecs = [B.vectorize() for B in C.basis]
    return {tuple(v) for v in span_set(C.spec, vecs, width=C.n * C.m)}


def brute_dual_distribution(C: RankMetricCode) -> tuple[int, ...]:
    """Histogram of ranks over {X : <X, B> = 0 for all basis B}, by full scan."""
    counts = [0] * (C.n + 1)
    for X in all_matrices(C.spec, C.n, C.m):
        if all(trace_product(X, B).is_zero() for B in C.basis):
            counts[brute_rank(X)] += 1
    return tuple(counts)


def brute_covering_radius(C: RankMetricCode) -> int:
    """Definition-direct: max over ambient X of min over codewords of rk(X - Y)."""
    words = [
        MatrixOverFq.from_vector(C.spec, C.n, C.m, w) for w in brute_codewords(C)
    ]
    worst = 0
    for X in all_matrices(C.spec, C.n, C.m):
        dist = min(brute_rank(X - Y) for Y in words)
        worst = max(worst, dist)
    return worst


def brute_min_line_cover(S, a: int, b: int) -> int:
    """Try every subset of rows and columns; positions are 1-based."""
    S = set(S)
    if not S:
        return 0
    best = a + b
    for r in range(a + 1):
        for rows in combinations(range(1, a + 1), r):
            rest = {(i, j) for (i, j) in S if i not in rows}
            cols = {j for (_, j) in rest}
            best = min(best, r + len(cols))
    return best


def brute_max_rooks(S) -> int:
    """Largest subset of S with pairwise distinct rows and columns."""
    S = sorted(S)

    def rec(idx: int, used_rows: frozenset, used_cols: frozenset) -> int:
        if idx == len(S):
            return 0
        best = rec(idx + 1, used_rows, used_cols)
        i, j = S[idx]
        if i not in used_rows and j not in used_cols:
            best = max(best, 1 + rec(idx + 1, used_rows | {i}, used_cols | {j}))
        return best

    return rec(0, frozenset(), frozenset())


def random_code(rng: random.Random, spec: FieldSpec, n: int, m: int, dim: int | None = None):
    """Random code; when dim is given, resample until the span has that dimension."""
    while True:
        k = rng.randint(0, n * m) if dim is None else dim
        gens = []
        for _ in range(k):
            rows = [
                [spec.from_int(rng.randrange(spec.order)) for _ in range(m)] for _ in range(n)
            ]
            gens.append(MatrixOverFq.from_rows(spec, rows))
        C = from_generators(spec, n, m, gens)
        if dim is None or C.dim == dim:
            return C


def random_matrix(rng: random.Random, spec: FieldSpec, n: int, m: int) -> MatrixOverFq:
    rows = [[spec.from_int(rng.randrange(spec.order)) for _ in range(m)] for _ in range(n)]
    return MatrixOverFq.from_rows(spec, rows)
