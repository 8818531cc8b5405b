"""Constructions of extremal codes: Gabidulin-type MRD codes for every
parameter set, and the column/row support spaces that realize optimal
anticodes.
"""

from __future__ import annotations

from .codes import RankMetricCode, from_generators
from .fields import ExtensionTower, FieldSpec
from .matrices import MatrixOverFq, Subspace


def build_mrd(
    spec: FieldSpec,
    n: int,
    m: int,
    d: int,
    tower: ExtensionTower | None = None,
) -> RankMetricCode:
    """MRD code in GF(q)^{n x m} with minimum distance exactly d.

    Evaluates the q-linearized maps L_u(x) = sum_l u_l x^(q^l) of q-degree
    below k = n - d + 1 against an ordered basis (b_1, ..., b_m) of GF(q^m):
    the codeword for u has entries trace(b_j * L_u(b_i)).  Generators are
    emitted for u ranging over the k*m standard GF(q)-basis vectors of
    GF(q^m)^k, ordered by coordinate index then basis element index, so the
    canonical result is reproducible.  The basis used is recorded on the
    tower (default: polynomial basis of the top-field generator).
    """
    if not 1 <= d <= n <= m:
        raise ValueError(f"need 1 <= d <= n <= m, got n={n}, m={m}, d={d}")
    if tower is None:
        tower = ExtensionTower(spec, m)
    elif tower.base != spec or tower.degree != m:
        raise ValueError("tower does not match the requested field and m")
    k = n - d + 1
    q = spec.order
    basis = tower.basis
    # frob[l][i] = b_{i+1}^(q^l)
    frob = [list(basis)]
    for _ in range(1, k):
        frob.append([x**q for x in frob[-1]])
    generators = []
    for ell in range(k):
        for t in range(m):
            rows = []
            for i in range(n):
                prod_i = frob[ell][i] * basis[t]
                rows.append([tower.trace(basis[j] * prod_i) for j in range(m)])
            generators.append(MatrixOverFq.from_rows(spec, rows))
    code = from_generators(spec, n, m, generators)
    if code.dim != m * k:
        raise AssertionError("construction produced the wrong dimension")
    return code


def build_column_anticode(U: Subspace, m: int) -> RankMetricCode:
    """The space {X in GF(q)^{n x m} : column-space(X) <= U} for U <= GF(q)^n.

    Dimension m * dim(U); every element has rank at most dim(U), with
    equality attained, so the anticode bound is met with equality.
    """
    n = U.ambient_dim
    if not 1 <= n <= m:
        raise ValueError(f"need 1 <= n <= m, got n={n}, m={m}")
    spec = U.spec
    zero = spec.zero()
    generators = []
    for u in U.basis:
        for j in range(m):
            rows = [[u[i] if c == j else zero for c in range(m)] for i in range(n)]
            generators.append(MatrixOverFq.from_rows(spec, rows))
    code = from_generators(spec, n, m, generators)
    if code.dim != m * U.dim:
        raise AssertionError("column anticode has the wrong dimension")
    return code


def build_row_anticode(U: Subspace, n: int) -> RankMetricCode:
    """The space {X in GF(q)^{n x n} : row-space(X) <= U} for U <= GF(q)^n.

    Row-support spaces are optimal anticodes only in the square case, so
    n must equal the ambient dimension of U.
    """
    m = U.ambient_dim
    if n != m:
        raise ValueError("classification requires square")
    spec = U.spec
    zero = spec.zero()
    generators = []
    for u in U.basis:
        for i in range(n):
            rows = [list(u) if r == i else [zero] * m for r in range(n)]
            generators.append(MatrixOverFq.from_rows(spec, rows))
    code = from_generators(spec, n, m, generators)
    if code.dim != n * U.dim:
        raise AssertionError("row anticode has the wrong dimension")
    return code
