"""Rank-metric codes: GF(q)-linear spaces of n x m matrices and their
directly-computed parameters.

A code is stored as the reduced row-echelon basis of its row-major
vectorization, so two equal codes hold identical bases, and the initial set
is a pivot read-off.  Conventions for the zero code: minimum distance n+1,
maximum rank 0, initial set undefined (raises), and it meets the
Singleton-type bound with equality (dimension 0 = m*(n-(n+1)+1)).

Exhaustive operations take an element budget (default 2^24) and raise
BudgetExceededError beyond it; callers fall back to closed forms or bounds.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterator, Sequence

from .errors import BudgetExceededError
from .fields import FieldSpec
from .matrices import (
    MatrixOverFq,
    Subspace,
    column_space,
    nullspace,
    orthogonal_subspace,
    rank_of_coded_rows,
    rref,
    row_space,
)

DEFAULT_BUDGET = 2**24

CodeVector = tuple[int, ...]


@dataclass(frozen=True)
class RankDistribution:
    """Histogram (W_0, ..., W_n) of codeword ranks, exact naturals."""

    counts: tuple[int, ...]

    def __post_init__(self):
        if any(c < 0 for c in self.counts):
            raise ValueError("rank distribution entries must be non-negative")

    @property
    def size(self) -> int:
        return sum(self.counts)

    def __getitem__(self, i: int) -> int:
        return self.counts[i]

    def __len__(self) -> int:
        return len(self.counts)

    def __iter__(self):
        return iter(self.counts)

    def __str__(self) -> str:
        return "(" + ", ".join(str(c) for c in self.counts) + ")"


@dataclass(frozen=True)
class EntrySet:
    """Subset of matrix positions, 1-based: (row, col) with row in [n], col in [m]."""

    positions: frozenset[tuple[int, int]]

    @classmethod
    def of(cls, pairs) -> EntrySet:
        return cls(frozenset((int(i), int(j)) for i, j in pairs))

    def __iter__(self):
        return iter(sorted(self.positions))

    def __len__(self) -> int:
        return len(self.positions)

    def __contains__(self, pair) -> bool:
        return pair in self.positions


@dataclass(frozen=True)
class AnticodeClassification:
    """Outcome of the optimal-anticode check with its support witness."""

    is_optimal: bool
    side: str | None  # "column" or "row" when optimal
    support: Subspace | None


@dataclass(frozen=True)
class RankMetricCode:
    """GF(q)-linear subspace of n x m matrices (n <= m), canonical basis.

    The raw constructor trusts that the basis matrices vectorize to an RREF
    basis; use from_generators for arbitrary spanning sets.
    """

    spec: FieldSpec
    n: int
    m: int
    basis: tuple[MatrixOverFq, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def size(self) -> int:
        return self.spec.order**self.dim

    def is_zero(self) -> bool:
        return self.dim == 0

    def is_ambient(self) -> bool:
        return self.dim == self.n * self.m


def from_generators(
    spec: FieldSpec, n: int, m: int, matrices: Sequence[MatrixOverFq]
) -> RankMetricCode:
    """Span of the given matrices, canonicalized; dependent generators collapse."""
    if not 1 <= n <= m:
        raise ValueError(f"need 1 <= n <= m, got n={n}, m={m}")
    for X in matrices:
        if X.spec != spec or X.n != n or X.m != m:
            raise ValueError("shape/field mismatch")
    reduced, _ = rref([X.vectorize() for X in matrices], spec)
    basis = tuple(MatrixOverFq.from_vector(spec, n, m, v) for v in reduced)
    return RankMetricCode(spec, n, m, basis)


def ambient_code(spec: FieldSpec, n: int, m: int) -> RankMetricCode:
    """The full matrix space GF(q)^{n x m} as a code."""
    if not 1 <= n <= m:
        raise ValueError(f"need 1 <= n <= m, got n={n}, m={m}")
    zero, one = spec.zero(), spec.one()
    basis = []
    for pos in range(n * m):
        vec = [zero] * (n * m)
        vec[pos] = one
        basis.append(MatrixOverFq.from_vector(spec, n, m, vec))
    return RankMetricCode(spec, n, m, tuple(basis))


def contains(C: RankMetricCode, X: MatrixOverFq) -> bool:
    """Membership test by reduction against the canonical basis."""
    if X.spec != C.spec or X.n != C.n or X.m != C.m:
        raise ValueError("shape/field mismatch")
    v = list(X.vectorize())
    for B in C.basis:
        row = B.vectorize()
        pivot = next(i for i, x in enumerate(row) if not x.is_zero())
        if not v[pivot].is_zero():
            f = v[pivot]
            v = [a - f * b for a, b in zip(v, row)]
    return all(x.is_zero() for x in v)


# --- coded-vector kernels -------------------------------------------------

_TABLE_LIMIT = 512


@lru_cache(maxsize=None)
def _code_arith(spec: FieldSpec) -> tuple[Callable[[int, int], int], Callable[[int, int], int]]:
    """(add, mul) on canonical element codes, fastest available route."""
    q = spec.order
    if q == 2:
        return (lambda a, b: a ^ b), (lambda a, b: a & b)
    if spec.e == 1:
        p = spec.p
        return (lambda a, b: (a + b) % p), (lambda a, b: (a * b) % p)
    if q <= _TABLE_LIMIT:
        elems = [spec.from_int(c) for c in range(q)]
        add_t = [[(elems[a] + elems[b]).to_int() for b in range(q)] for a in range(q)]
        mul_t = [[(elems[a] * elems[b]).to_int() for b in range(q)] for a in range(q)]
        return (lambda a, b: add_t[a][b]), (lambda a, b: mul_t[a][b])
    add = lambda a, b: (spec.from_int(a) + spec.from_int(b)).to_int()  # noqa: E731
    mul = lambda a, b: (spec.from_int(a) * spec.from_int(b)).to_int()  # noqa: E731
    return add, mul


def _basis_code_vectors(C: RankMetricCode) -> list[CodeVector]:
    return [tuple(v.to_int() for v in B.vectorize()) for B in C.basis]


def _iter_vector_codes(C: RankMetricCode) -> Iterator[CodeVector]:
    """All codeword vectorizations as element-code tuples.

    Order is lexicographic in the coefficient vector over the canonical basis
    (elements in canonical order), so the zero word comes first.
    """
    add, mul = _code_arith(C.spec)
    q = C.spec.order
    length = C.n * C.m
    zero_vec: CodeVector = (0,) * length
    basis_vecs = _basis_code_vectors(C)
    scaled = [
        [tuple(mul(lam, c) for c in bv) for lam in range(q)]
        for bv in basis_vecs
    ]

    def rec(i: int, acc: CodeVector) -> Iterator[CodeVector]:
        if i == len(basis_vecs):
            yield acc
            return
        row = scaled[i]
        for lam in range(q):
            if lam == 0:
                yield from rec(i + 1, acc)
            else:
                yield from rec(i + 1, tuple(add(a, b) for a, b in zip(acc, row[lam])))

    return rec(0, zero_vec)


def _vector_rank(C: RankMetricCode, vec: CodeVector) -> int:
    m = C.m
    rows = [vec[i * m : (i + 1) * m] for i in range(C.n)]
    return rank_of_coded_rows(rows, C.spec)


def _matrix_code_vector(X: MatrixOverFq) -> CodeVector:
    return tuple(v.to_int() for v in X.vectorize())


def _check_budget(count: int, budget: int, computation: str) -> None:
    if count > budget:
        raise BudgetExceededError(computation, count, budget)


# --- enumerated parameters -------------------------------------------------


def codewords(C: RankMetricCode, budget: int = DEFAULT_BUDGET) -> Iterator[MatrixOverFq]:
    """All q^dim codewords, deterministically ordered, zero first."""
    _check_budget(C.size, budget, "codeword enumeration")
    spec = C.spec
    for vec in _iter_vector_codes(C):
        elems = [spec.from_int(c) for c in vec]
        yield MatrixOverFq.from_vector(spec, C.n, C.m, elems)


def minimum_distance(C: RankMetricCode, budget: int = DEFAULT_BUDGET) -> int:
    """Least rank of a nonzero codeword; n+1 for the zero code."""
    if C.is_zero():
        return C.n + 1
    _check_budget(C.size, budget, "minimum distance enumeration")
    best = C.n + 1
    first = True
    for vec in _iter_vector_codes(C):
        if first:
            first = False  # the zero word
            continue
        r = _vector_rank(C, vec)
        if r < best:
            best = r
            if best == 1:
                break
    return best


def rank_distribution(C: RankMetricCode, budget: int = DEFAULT_BUDGET) -> RankDistribution:
    """Exact histogram of codeword ranks, (W_0, ..., W_n)."""
    _check_budget(C.size, budget, "rank distribution enumeration")
    counts = [0] * (C.n + 1)
    for vec in _iter_vector_codes(C):
        counts[_vector_rank(C, vec)] += 1
    return RankDistribution(tuple(counts))


def maximum_rank(C: RankMetricCode, budget: int = DEFAULT_BUDGET) -> int:
    """Largest codeword rank (0 for the zero code)."""
    if C.is_zero():
        return 0
    _check_budget(C.size, budget, "maximum rank enumeration")
    best = 0
    for vec in _iter_vector_codes(C):
        r = _vector_rank(C, vec)
        if r > best:
            best = r
            if best == C.n:
                break
    return best


def translate_rank_distribution(
    C: RankMetricCode, M: MatrixOverFq, budget: int = DEFAULT_BUDGET
) -> RankDistribution:
    """Rank histogram of the coset C + M; W_0 = 0 exactly when M is not in C."""
    if M.spec != C.spec or M.n != C.n or M.m != C.m:
        raise ValueError("shape/field mismatch")
    _check_budget(C.size, budget, "translate enumeration")
    add, _ = _code_arith(C.spec)
    mvec = _matrix_code_vector(M)
    counts = [0] * (C.n + 1)
    for vec in _iter_vector_codes(C):
        shifted = tuple(add(a, b) for a, b in zip(vec, mvec))
        counts[_vector_rank(C, shifted)] += 1
    return RankDistribution(tuple(counts))


def dual(C: RankMetricCode) -> RankMetricCode:
    """Dual code w.r.t. the trace product; dim(dual) = n*m - dim."""
    width = C.n * C.m
    if C.is_zero():
        return ambient_code(C.spec, C.n, C.m)
    kernel = nullspace([B.vectorize() for B in C.basis], width, C.spec)
    basis = tuple(MatrixOverFq.from_vector(C.spec, C.n, C.m, v) for v in kernel)
    return RankMetricCode(C.spec, C.n, C.m, basis)


def shorten(C: RankMetricCode, U: Subspace) -> RankMetricCode:
    """Subcode of codewords whose column space lies inside U <= GF(q)^n."""
    if U.spec != C.spec or U.ambient_dim != C.n:
        raise ValueError("ambient mismatch")
    if C.is_zero():
        return C
    # column-space(X) <= U  iff  w^T X = 0 for every w in the orthogonal of U.
    perp = orthogonal_subspace(U)
    if perp.dim == 0:
        return C
    zero = C.spec.zero()
    constraints = []
    for w in perp.basis:
        for j in range(C.m):
            row = []
            for B in C.basis:
                acc = zero
                for i in range(C.n):
                    if not w[i].is_zero():
                        acc = acc + w[i] * B.entries[i][j]
                row.append(acc)
            constraints.append(row)
    kernel = nullspace(constraints, C.dim, C.spec)
    members = []
    for coeffs in kernel:
        acc = MatrixOverFq.zero(C.spec, C.n, C.m)
        for lam, B in zip(coeffs, C.basis):
            if not lam.is_zero():
                acc = acc + B.scale(lam)
        members.append(acc)
    return from_generators(C.spec, C.n, C.m, members)


def initial_entry(X: MatrixOverFq) -> tuple[int, int]:
    """First nonzero position of X in the order (1,1) < (1,2) < ... < (n,m)."""
    for i in range(X.n):
        for j in range(X.m):
            if not X.entries[i][j].is_zero():
                return (i + 1, j + 1)
    raise ValueError("undefined for the zero matrix")


def initial_set(C: RankMetricCode) -> EntrySet:
    """Initial entries over all nonzero codewords; size equals dim(C).

    Read off the canonical basis pivots: the basis vectorizations are RREF, so
    their leading positions are exactly the initial entries of the code.
    """
    if C.is_zero():
        raise ValueError("undefined for zero code")
    positions = []
    for B in C.basis:
        vec = B.vectorize()
        pivot = next(i for i, x in enumerate(vec) if not x.is_zero())
        positions.append((pivot // C.m + 1, pivot % C.m + 1))
    return EntrySet.of(positions)


def covering_radius_exact(C: RankMetricCode, budget: int = DEFAULT_BUDGET) -> int:
    """Exact covering radius by exhausting the q^{nm-k} cosets.

    Each coset is scanned for its minimum rank; the covering radius is the
    maximum over cosets.  Zero exactly for the ambient space.
    """
    ambient = C.spec.order ** (C.n * C.m)
    _check_budget(ambient, budget, "covering radius search")
    add, _ = _code_arith(C.spec)
    q = C.spec.order
    length = C.n * C.m
    basis_vecs = _basis_code_vectors(C)
    pivots = {next(i for i, c in enumerate(bv) if c) for bv in basis_vecs}
    free = [i for i in range(length) if i not in pivots]

    store = C.size <= 2**20
    words = list(_iter_vector_codes(C)) if store else None

    best = 0
    rep = [0] * length
    elems = list(range(q))

    def reps(idx: int) -> Iterator[CodeVector]:
        if idx == len(free):
            yield tuple(rep)
            return
        pos = free[idx]
        for v in elems:
            rep[pos] = v
            yield from reps(idx + 1)
        rep[pos] = 0

    for r in reps(0):
        coset_min = C.n + 1
        iterator = words if store else _iter_vector_codes(C)
        for w in iterator:
            shifted = tuple(add(a, b) for a, b in zip(r, w))
            rk = _vector_rank(C, shifted)
            if rk < coset_min:
                coset_min = rk
                if coset_min <= best:
                    break
        if coset_min > best:
            best = coset_min
    return best


# --- bound-style parameters -------------------------------------------------


def singleton_defect(C: RankMetricCode, budget: int = DEFAULT_BUDGET) -> int:
    """m*(n - d + 1) - dim >= 0; zero exactly for MRD codes."""
    d = minimum_distance(C, budget)
    return C.m * (C.n - d + 1) - C.dim


def is_mrd(C: RankMetricCode, budget: int = DEFAULT_BUDGET) -> bool:
    """Whether the code meets the Singleton-type bound with equality.

    The zero code is MRD by the d = n+1 convention.
    """
    return singleton_defect(C, budget) == 0


def anticode_defect(C: RankMetricCode, budget: int = DEFAULT_BUDGET) -> int:
    """m*maxrk(C) - dim >= 0; zero exactly for optimal anticodes."""
    return C.m * maximum_rank(C, budget) - C.dim


def is_optimal_anticode(
    C: RankMetricCode, budget: int = DEFAULT_BUDGET
) -> AnticodeClassification:
    """Optimal-anticode check plus the support-space witness.

    Optimal anticodes are exactly the column-support spaces {X : colsp(X) <= U}
    (and, in the square case only, row-support spaces).  The column side is
    tried first; the returned witness is verified by membership re-check.
    """
    maxrk = maximum_rank(C, budget)
    if C.m * maxrk != C.dim:
        return AnticodeClassification(False, None, None)
    # Column side: U = join of basis column spaces.
    U = Subspace.zero(C.spec, C.n)
    for B in C.basis:
        U = U.sum(column_space(B))
    if C.dim == C.m * U.dim and all(column_space(B) <= U for B in C.basis):
        return AnticodeClassification(True, "column", U)
    if C.n == C.m:
        V = Subspace.zero(C.spec, C.m)
        for B in C.basis:
            V = V.sum(row_space(B))
        if C.dim == C.n * V.dim and all(row_space(B) <= V for B in C.basis):
            return AnticodeClassification(True, "row", V)
    raise AssertionError("optimal anticode escaped the support classification")
