"""Exact linear algebra for matrices over GF(q) and subspaces of GF(q)^a.

Subspaces are stored as reduced row-echelon bases, which makes equality,
hashing, and deterministic enumeration trivial.  Rank computations dispatch
to a bit-packed GF(2) kernel or a plain modular kernel for prime fields;
extension fields take the generic element-wise path.  All paths are tested
to agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterable, Iterator, Sequence

from .fields import FieldElement, FieldSpec

# --- rank kernels -------------------------------------------------------------


def _rank_bits(rows: list[int]) -> int:
    """Rank over GF(2) of rows packed as integers (bit j = column j)."""
    rank = 0
    for i in range(len(rows)):
        row = rows[i]
        if not row:
            continue
        pivot = row & -row
        for j in range(i + 1, len(rows)):
            if rows[j] & pivot:
                rows[j] ^= row
        rank += 1
    return rank


def _rank_rows_prime(rows: list[list[int]], p: int) -> int:
    """Rank over GF(p) of residue rows; destroys its input."""
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    rank = 0
    for c in range(ncols):
        pr = next((i for i in range(rank, nrows) if rows[i][c] % p), None)
        if pr is None:
            continue
        rows[rank], rows[pr] = rows[pr], rows[rank]
        inv = pow(rows[rank][c], p - 2, p)
        top = rows[rank]
        for i in range(rank + 1, nrows):
            f = (rows[i][c] * inv) % p
            if f:
                ri = rows[i]
                for j in range(c, ncols):
                    ri[j] = (ri[j] - f * top[j]) % p
        rank += 1
        if rank == nrows:
            break
    return rank


def _rank_rows_generic(rows: list[list[FieldElement]], spec: FieldSpec) -> int:
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    rank = 0
    for c in range(ncols):
        pr = next((i for i in range(rank, nrows) if not rows[i][c].is_zero()), None)
        if pr is None:
            continue
        rows[rank], rows[pr] = rows[pr], rows[rank]
        inv = rows[rank][c].inverse()
        top = rows[rank]
        for i in range(rank + 1, nrows):
            if not rows[i][c].is_zero():
                f = rows[i][c] * inv
                rows[i] = [a - f * b for a, b in zip(rows[i], top)]
        rank += 1
        if rank == nrows:
            break
    return rank


def rank_of_coded_rows(rows: Sequence[Sequence[int]], spec: FieldSpec) -> int:
    """Rank of rows given as canonical element codes, via the fastest kernel."""
    if spec.order == 2:
        packed = []
        for row in rows:
            v = 0
            for j, c in enumerate(row):
                if c:
                    v |= 1 << j
            packed.append(v)
        return _rank_bits(packed)
    if spec.e == 1:
        return _rank_rows_prime([list(r) for r in rows], spec.p)
    decoded = [[spec.from_int(c) for c in row] for row in rows]
    return _rank_rows_generic(decoded, spec)


# --- generic RREF and nullspace ----------------------------------------------

Vector = tuple[FieldElement, ...]


def rref(rows: Iterable[Sequence[FieldElement]], spec: FieldSpec) -> tuple[list[Vector], list[int]]:
    """Reduced row-echelon form; returns (nonzero rows, pivot columns)."""
    work = [list(r) for r in rows]
    nrows = len(work)
    ncols = len(work[0]) if nrows else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, nrows) if not work[i][c].is_zero()), None)
        if pr is None:
            continue
        work[r], work[pr] = work[pr], work[r]
        scale = work[r][c].inverse()
        work[r] = [v * scale for v in work[r]]
        for i in range(nrows):
            if i != r and not work[i][c].is_zero():
                f = work[i][c]
                work[i] = [a - f * b for a, b in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return [tuple(work[i]) for i in range(r)], pivots


def nullspace(rows: Iterable[Sequence[FieldElement]], width: int, spec: FieldSpec) -> list[Vector]:
    """Canonical (RREF) basis of {v : M v = 0} for the matrix with the given rows."""
    reduced, pivots = rref(rows, spec)
    pivot_set = set(pivots)
    free = [c for c in range(width) if c not in pivot_set]
    zero, one = spec.zero(), spec.one()
    basis = []
    for f in free:
        vec = [zero] * width
        vec[f] = one
        for row, pc in zip(reduced, pivots):
            vec[pc] = -row[f]
        basis.append(vec)
    canonical, _ = rref(basis, spec)
    return canonical


# --- matrices -----------------------------------------------------------------


@dataclass(frozen=True)
class MatrixOverFq:
    """Immutable n x m matrix with exact GF(q) entries."""

    spec: FieldSpec
    n: int
    m: int
    entries: tuple[Vector, ...]

    @classmethod
    def from_rows(cls, spec: FieldSpec, rows: Sequence[Sequence]) -> MatrixOverFq:
        """Build from rows of FieldElements or plain ints (ints are element codes)."""
        if not rows or not rows[0]:
            raise ValueError("matrix must have at least one row and column")
        m = len(rows[0])
        out = []
        for row in rows:
            if len(row) != m:
                raise ValueError("ragged rows")
            conv = []
            for v in row:
                if isinstance(v, FieldElement):
                    if v.spec != spec:
                        raise ValueError("field mismatch")
                    conv.append(v)
                else:
                    conv.append(spec.from_int(int(v) % spec.order))
            out.append(tuple(conv))
        return cls(spec, len(out), m, tuple(out))

    @classmethod
    def zero(cls, spec: FieldSpec, n: int, m: int) -> MatrixOverFq:
        z = spec.zero()
        return cls(spec, n, m, tuple(tuple(z for _ in range(m)) for _ in range(n)))

    def _check(self, other: MatrixOverFq) -> None:
        if self.spec != other.spec or self.n != other.n or self.m != other.m:
            raise ValueError("shape/field mismatch")

    def __add__(self, other: MatrixOverFq) -> MatrixOverFq:
        self._check(other)
        return MatrixOverFq(
            self.spec,
            self.n,
            self.m,
            tuple(tuple(a + b for a, b in zip(r1, r2)) for r1, r2 in zip(self.entries, other.entries)),
        )

    def __sub__(self, other: MatrixOverFq) -> MatrixOverFq:
        self._check(other)
        return MatrixOverFq(
            self.spec,
            self.n,
            self.m,
            tuple(tuple(a - b for a, b in zip(r1, r2)) for r1, r2 in zip(self.entries, other.entries)),
        )

    def __neg__(self) -> MatrixOverFq:
        return MatrixOverFq(
            self.spec, self.n, self.m, tuple(tuple(-a for a in row) for row in self.entries)
        )

    def scale(self, c: FieldElement) -> MatrixOverFq:
        if c.spec != self.spec:
            raise ValueError("field mismatch")
        return MatrixOverFq(
            self.spec, self.n, self.m, tuple(tuple(c * a for a in row) for row in self.entries)
        )

    def is_zero(self) -> bool:
        return all(v.is_zero() for row in self.entries for v in row)

    def vectorize(self) -> Vector:
        """Row-major concatenation into a length n*m vector."""
        return tuple(v for row in self.entries for v in row)

    @classmethod
    def from_vector(cls, spec: FieldSpec, n: int, m: int, vec: Sequence[FieldElement]) -> MatrixOverFq:
        if len(vec) != n * m:
            raise ValueError("vector length does not match shape")
        return cls(spec, n, m, tuple(tuple(vec[i * m : (i + 1) * m]) for i in range(n)))

    def __str__(self) -> str:
        return "\n".join(" ".join(str(v) for v in row) for row in self.entries)


def rank(X: MatrixOverFq) -> int:
    """Rank over GF(q), exact."""
    codes = [[v.to_int() for v in row] for row in X.entries]
    return rank_of_coded_rows(codes, X.spec)


def rank_distance(X: MatrixOverFq, Y: MatrixOverFq) -> int:
    """rk(X - Y); a metric on the matrix space."""
    X._check(Y)
    return rank(X - Y)


def trace_product(X: MatrixOverFq, Y: MatrixOverFq) -> FieldElement:
    """Tr(X Y^T) = sum of entrywise products; symmetric and non-degenerate."""
    X._check(Y)
    acc = X.spec.zero()
    for r1, r2 in zip(X.entries, Y.entries):
        for a, b in zip(r1, r2):
            acc = acc + a * b
    return acc


# --- subspaces ----------------------------------------------------------------


@dataclass(frozen=True)
class Subspace:
    """Subspace of GF(q)^a held as a canonical RREF basis (rows).

    Construct via from_vectors / zero / full; the raw constructor trusts that
    its basis is already reduced.
    """

    spec: FieldSpec
    ambient_dim: int
    basis: tuple[Vector, ...]

    @classmethod
    def from_vectors(
        cls, spec: FieldSpec, ambient_dim: int, vectors: Iterable[Sequence[FieldElement]]
    ) -> Subspace:
        vecs = [tuple(v) for v in vectors]
        for v in vecs:
            if len(v) != ambient_dim:
                raise ValueError("vector length does not match ambient dimension")
        reduced, _ = rref(vecs, spec)
        return cls(spec, ambient_dim, tuple(reduced))

    @classmethod
    def zero(cls, spec: FieldSpec, ambient_dim: int) -> Subspace:
        return cls(spec, ambient_dim, ())

    @classmethod
    def full(cls, spec: FieldSpec, ambient_dim: int) -> Subspace:
        zero, one = spec.zero(), spec.one()
        rows = tuple(
            tuple(one if j == i else zero for j in range(ambient_dim)) for i in range(ambient_dim)
        )
        return cls(spec, ambient_dim, rows)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, vec: Sequence[FieldElement]) -> bool:
        v = list(vec)
        if len(v) != self.ambient_dim:
            raise ValueError("vector length does not match ambient dimension")
        for row in self.basis:
            pivot = next(i for i, x in enumerate(row) if not x.is_zero())
            if not v[pivot].is_zero():
                f = v[pivot]
                v = [a - f * b for a, b in zip(v, row)]
        return all(x.is_zero() for x in v)

    def __le__(self, other: Subspace) -> bool:
        if self.spec != other.spec or self.ambient_dim != other.ambient_dim:
            raise ValueError("ambient mismatch")
        return all(other.contains(row) for row in self.basis)

    def sum(self, other: Subspace) -> Subspace:
        if self.spec != other.spec or self.ambient_dim != other.ambient_dim:
            raise ValueError("ambient mismatch")
        return Subspace.from_vectors(self.spec, self.ambient_dim, self.basis + other.basis)

    def intersect(self, other: Subspace) -> Subspace:
        # U meet V = (U* + V*)*, valid since the standard form is non-degenerate.
        return orthogonal_subspace(orthogonal_subspace(self).sum(orthogonal_subspace(other)))

    def vectors(self) -> Iterator[Vector]:
        """All q^dim vectors, coefficient-lexicographic over the basis."""
        zero = tuple(self.spec.zero() for _ in range(self.ambient_dim))
        elems = list(self.spec.elements())

        def rec(i: int, acc: Vector) -> Iterator[Vector]:
            if i == len(self.basis):
                yield acc
                return
            for lam in elems:
                if lam.is_zero():
                    yield from rec(i + 1, acc)
                else:
                    scaled = tuple(a + lam * b for a, b in zip(acc, self.basis[i]))
                    yield from rec(i + 1, scaled)

        return rec(0, zero)


def orthogonal_subspace(U: Subspace) -> Subspace:
    """Orthogonal complement w.r.t. the standard inner product of GF(q)^a."""
    if U.dim == 0:
        return Subspace.full(U.spec, U.ambient_dim)
    kernel = nullspace(U.basis, U.ambient_dim, U.spec)
    return Subspace(U.spec, U.ambient_dim, tuple(kernel))


def column_space(X: MatrixOverFq) -> Subspace:
    cols = [tuple(X.entries[i][j] for i in range(X.n)) for j in range(X.m)]
    return Subspace.from_vectors(X.spec, X.n, cols)


def row_space(X: MatrixOverFq) -> Subspace:
    return Subspace.from_vectors(X.spec, X.m, X.entries)


def enumerate_subspaces(ambient_dim: int, dim: int, spec: FieldSpec) -> Iterator[Subspace]:
    """All dim-dimensional subspaces of GF(q)^a, each exactly once.

    Deterministic order: lexicographic on the RREF pivot pattern, then on the
    free entries (row-major, field elements in canonical order).  The stream
    length is the q-binomial coefficient [a choose dim]_q.
    """
    if not 0 <= dim <= ambient_dim:
        raise ValueError("dimension out of range")
    zero, _one = spec.zero(), spec.one()
    elems = list(spec.elements())
    for pivots in combinations(range(ambient_dim), dim):
        pivot_set = set(pivots)
        free = [
            (r, c)
            for r in range(dim)
            for c in range(pivots[r] + 1, ambient_dim)
            if c not in pivot_set
        ]
        for values in product(elems, repeat=len(free)):
            rows = [[zero] * ambient_dim for _ in range(dim)]
            for r in range(dim):
                rows[r][pivots[r]] = _one
            for (r, c), v in zip(free, values):
                rows[r][c] = v
            yield Subspace(spec, ambient_dim, tuple(tuple(r) for r in rows))
