"""Exact arithmetic in GF(p^e) and in extension towers GF(q^m)/GF(q).

Elements are polynomial residues modulo a monic irreducible polynomial over
the prime field, stored as coefficient tuples (low degree first).  All
operations are exact; nothing here ever touches floating point.

An extension tower realizes GF(q^m) as a single degree e*m extension of the
prime field GF(p) with an embedded copy of GF(q) (found once and cached),
which avoids nested-quotient arithmetic.  Towers carry an ordered GF(q)-basis
of the top field together with its trace-dual basis, the two ingredients of
the Delsarte/Gabidulin-style code construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

Coeffs = tuple[int, ...]


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _prime_factors(n: int) -> list[int]:
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


# --- dense polynomial arithmetic over GF(p), coefficients low-to-high -------


def _ptrim(a: Sequence[int]) -> tuple[int, ...]:
    i = len(a)
    while i > 0 and a[i - 1] == 0:
        i -= 1
    return tuple(a[:i])


def _padd(a: Sequence[int], b: Sequence[int], p: int) -> tuple[int, ...]:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = (out[i] + c) % p
    return _ptrim(out)


def _psub(a: Sequence[int], b: Sequence[int], p: int) -> tuple[int, ...]:
    out = list(a) + [0] * max(0, len(b) - len(a))
    for i, c in enumerate(b):
        out[i] = (out[i] - c) % p
    return _ptrim(out)


def _pmul(a: Sequence[int], b: Sequence[int], p: int) -> tuple[int, ...]:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _ptrim(out)


def _pmod(a: Sequence[int], f: Sequence[int], p: int) -> tuple[int, ...]:
    """Remainder of a modulo f (f need not be monic)."""
    a = list(a)
    df = len(_ptrim(f)) - 1
    if df < 0:
        raise ZeroDivisionError("polynomial modulus is zero")
    inv_lead = pow(f[df], p - 2, p)
    for i in range(len(a) - 1, df - 1, -1):
        c = a[i] % p
        if c:
            scale = (c * inv_lead) % p
            for j in range(df + 1):
                a[i - df + j] = (a[i - df + j] - scale * f[j]) % p
    return _ptrim(a)


def _ppowmod(a: Sequence[int], k: int, f: Sequence[int], p: int) -> tuple[int, ...]:
    result: tuple[int, ...] = (1,)
    base = _pmod(a, f, p)
    while k:
        if k & 1:
            result = _pmod(_pmul(result, base, p), f, p)
        base = _pmod(_pmul(base, base, p), f, p)
        k >>= 1
    return result


def _pgcd(a: Sequence[int], b: Sequence[int], p: int) -> tuple[int, ...]:
    a, b = _ptrim(a), _ptrim(b)
    while b:
        a, b = b, _pmod(a, b, p)
    return a


def _pinvmod(a: Sequence[int], f: Sequence[int], p: int) -> tuple[int, ...]:
    """Inverse of a modulo f via the extended Euclidean algorithm."""
    r0, r1 = _ptrim(f), _pmod(a, f, p)
    s0: tuple[int, ...] = ()
    s1: tuple[int, ...] = (1,)
    while r1:
        dr0, dr1 = len(r0) - 1, len(r1) - 1
        if dr0 < dr1:
            r0, r1, s0, s1 = r1, r0, s1, s0
            continue
        inv_lead = pow(r1[-1], p - 2, p)
        # One long-division step folded into the loop.
        q = [0] * (dr0 - dr1 + 1)
        rem = list(r0)
        for i in range(dr0, dr1 - 1, -1):
            c = rem[i] % p
            if c:
                scale = (c * inv_lead) % p
                q[i - dr1] = scale
                for j in range(dr1 + 1):
                    rem[i - dr1 + j] = (rem[i - dr1 + j] - scale * r1[j]) % p
        r0, r1 = r1, _ptrim(rem)
        s0, s1 = s1, _psub(s0, _pmul(q, s1, p), p)
    if len(r0) != 1:
        raise ZeroDivisionError("element is not invertible")
    scale = pow(r0[0], p - 2, p)
    return _pmod(_pmul(s0, (scale,), p), f, p)


def _is_irreducible(f: Coeffs, p: int) -> bool:
    """Rabin's test for a monic polynomial of degree >= 1 over GF(p)."""
    e = len(f) - 1
    if e < 1:
        return False
    if e == 1:
        return True
    if f[0] == 0:  # divisible by x
        return False
    x: Coeffs = (0, 1)
    # x^(p^e) == x mod f
    img = x
    for _ in range(e):
        img = _ppowmod(img, p, f, p)
    if img != _pmod(x, f, p):
        return False
    for r in _prime_factors(e):
        img = x
        for _ in range(e // r):
            img = _ppowmod(img, p, f, p)
        g = _pgcd(_psub(img, x, p), f, p)
        if len(g) - 1 != 0:
            return False
    return True


# --- field specifications and elements ---------------------------------------


@dataclass(frozen=True)
class FieldSpec:
    """Arithmetic description of GF(p^e).

    `modulus` is a monic irreducible polynomial of degree e over GF(p),
    coefficients low-to-high; it is the empty tuple when e == 1.  Two specs
    with equal (p, e, modulus) define identical arithmetic.
    """

    p: int
    e: int
    modulus: Coeffs

    @property
    def order(self) -> int:
        return self.p**self.e

    # -- element construction --

    def zero(self) -> FieldElement:
        return FieldElement(self, (0,) * self.e)

    def one(self) -> FieldElement:
        return FieldElement(self, (1,) + (0,) * (self.e - 1))

    def from_coeffs(self, coeffs: Sequence[int]) -> FieldElement:
        if len(coeffs) > self.e:
            raise ValueError(f"expected at most {self.e} coefficients")
        c = tuple(int(v) % self.p for v in coeffs)
        return FieldElement(self, c + (0,) * (self.e - len(c)))

    def from_int(self, code: int) -> FieldElement:
        """Element with canonical index `code` in [0, q): base-p digits, low first."""
        if not 0 <= code < self.order:
            raise ValueError(f"element code {code} out of range for {self}")
        digits = []
        for _ in range(self.e):
            digits.append(code % self.p)
            code //= self.p
        return FieldElement(self, tuple(digits))

    def elements(self) -> Iterator[FieldElement]:
        """All q elements in canonical (integer code) order."""
        for code in range(self.order):
            yield self.from_int(code)

    def parse_element(self, token: str) -> FieldElement:
        """Inverse of str(element): an integer, or dot-joined coefficients."""
        parts = token.split(".")
        if len(parts) == 1 and self.e > 1 and parts[0].lstrip("-").isdigit():
            # Bare integers are accepted in extension fields as prime-subfield
            # values, so files written for GF(p) read back into GF(p^e).
            return self.from_coeffs((int(parts[0]),))
        if len(parts) != self.e:
            raise ValueError(f"expected {self.e} coefficients in entry {token!r}")
        try:
            coeffs = [int(s) for s in parts]
        except ValueError:
            raise ValueError(f"bad entry {token!r}") from None
        return self.from_coeffs(coeffs)

    def description(self) -> str:
        """Serialized form, e.g. GF(3) or GF(2^2; modulus=1,1,1)."""
        if self.e == 1:
            return f"GF({self.p})"
        mod = ",".join(str(c) for c in self.modulus)
        return f"GF({self.p}^{self.e}; modulus={mod})"

    def __str__(self) -> str:
        return self.description()

    # -- raw coefficient arithmetic (used by FieldElement operators) --

    def _add(self, a: Coeffs, b: Coeffs) -> Coeffs:
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def _sub(self, a: Coeffs, b: Coeffs) -> Coeffs:
        p = self.p
        return tuple((x - y) % p for x, y in zip(a, b))

    def _neg(self, a: Coeffs) -> Coeffs:
        p = self.p
        return tuple((-x) % p for x in a)

    def _mul(self, a: Coeffs, b: Coeffs) -> Coeffs:
        if self.e == 1:
            return ((a[0] * b[0]) % self.p,)
        prod = _pmod(_pmul(a, b, self.p), self.modulus, self.p)
        return prod + (0,) * (self.e - len(prod))

    def _inv(self, a: Coeffs) -> Coeffs:
        if all(c == 0 for c in a):
            raise ZeroDivisionError("division by zero field element")
        if self.e == 1:
            return (pow(a[0], self.p - 2, self.p),)
        inv = _pinvmod(a, self.modulus, self.p)
        return inv + (0,) * (self.e - len(inv))


@dataclass(frozen=True)
class FieldElement:
    """Immutable element of GF(p^e); equality is coefficient-wise."""

    spec: FieldSpec
    coeffs: Coeffs

    def _check(self, other: FieldElement) -> None:
        if not isinstance(other, FieldElement) or other.spec != self.spec:
            raise ValueError("field mismatch")

    def __add__(self, other: FieldElement) -> FieldElement:
        self._check(other)
        return FieldElement(self.spec, self.spec._add(self.coeffs, other.coeffs))

    def __sub__(self, other: FieldElement) -> FieldElement:
        self._check(other)
        return FieldElement(self.spec, self.spec._sub(self.coeffs, other.coeffs))

    def __mul__(self, other: FieldElement) -> FieldElement:
        self._check(other)
        return FieldElement(self.spec, self.spec._mul(self.coeffs, other.coeffs))

    def __truediv__(self, other: FieldElement) -> FieldElement:
        self._check(other)
        return FieldElement(self.spec, self.spec._mul(self.coeffs, self.spec._inv(other.coeffs)))

    def __neg__(self) -> FieldElement:
        return FieldElement(self.spec, self.spec._neg(self.coeffs))

    def __pow__(self, k: int) -> FieldElement:
        if k < 0:
            return self.inverse() ** (-k)
        result = self.spec.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse(self) -> FieldElement:
        return FieldElement(self.spec, self.spec._inv(self.coeffs))

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def to_int(self) -> int:
        """Canonical index in [0, q): coefficients as base-p digits, low first."""
        code = 0
        for c in reversed(self.coeffs):
            code = code * self.spec.p + c
        return code

    def __str__(self) -> str:
        if self.spec.e == 1:
            return str(self.coeffs[0])
        return ".".join(str(c) for c in self.coeffs)

    def __repr__(self) -> str:
        return f"FieldElement({self.spec.description()}, {self})"


@lru_cache(maxsize=None)
def make_field(p: int, e: int) -> FieldSpec:
    """GF(p^e) with a deterministically chosen modulus.

    The modulus is the first irreducible polynomial in the fixed total order
    that reads the non-leading coefficients (c_0, ..., c_{e-1}) as a base-p
    integer, so repeated runs (and independent implementations following the
    same rule) agree on the arithmetic.
    """
    if not isinstance(p, int) or not _is_prime(p):
        raise ValueError(f"not prime: {p}")
    if not isinstance(e, int) or e < 1:
        raise ValueError(f"bad exponent: {e}")
    if e == 1:
        return FieldSpec(p, 1, ())
    for value in range(p**e):
        digits = []
        v = value
        for _ in range(e):
            digits.append(v % p)
            v //= p
        candidate = tuple(digits) + (1,)
        if _is_irreducible(candidate, p):
            return FieldSpec(p, e, candidate)
    raise AssertionError("no irreducible polynomial found")  # unreachable


def field_with_modulus(p: int, e: int, modulus: Sequence[int]) -> FieldSpec:
    """GF(p^e) with an explicitly supplied monic irreducible modulus."""
    if not _is_prime(p):
        raise ValueError(f"not prime: {p}")
    if e < 1:
        raise ValueError(f"bad exponent: {e}")
    if e == 1:
        if len(modulus) not in (0, 2):
            raise ValueError("prime field takes an empty modulus")
        return FieldSpec(p, 1, ())
    mod = tuple(int(c) % p for c in modulus)
    if len(mod) != e + 1:
        raise ValueError(f"modulus must have degree {e} ({e + 1} coefficients)")
    if mod[e] != 1:
        raise ValueError("modulus must be monic")
    if not _is_irreducible(mod, p):
        raise ValueError("modulus is not irreducible")
    return FieldSpec(p, e, mod)


def field_for_order(q: int) -> FieldSpec:
    """Canonical GF(q) for a prime power q."""
    if q < 2:
        raise ValueError(f"not a prime power: {q}")
    p = _prime_factors(q)[0]
    e = 0
    v = q
    while v % p == 0:
        v //= p
        e += 1
    if v != 1:
        raise ValueError(f"not a prime power: {q}")
    return make_field(p, e)


# --- small dense linear algebra mod p (tower plumbing only) ------------------


def _rref_mod_p(rows: list[list[int]], p: int) -> tuple[list[list[int]], list[int]]:
    """In-place reduced row echelon form over GF(p); returns (rows, pivot cols)."""
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, nrows) if rows[i][c] % p), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = pow(rows[r][c], p - 2, p)
        rows[r] = [(v * inv) % p for v in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c] % p:
                f = rows[i][c]
                rows[i] = [(a - f * b) % p for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return rows, pivots


class ExtensionTower:
    """GF(q^m) as an extension of GF(q), with trace and dual-basis support.

    The top field is the canonical GF(p^{e*m}); the copy of GF(q) inside it is
    located once at construction time (as the fixed field of the e-th Frobenius
    power) and cached.  `basis` is an ordered GF(q)-basis of the top field; the
    default is the polynomial basis (1, g, ..., g^{m-1}) of the top generator.
    """

    def __init__(
        self,
        base: FieldSpec,
        degree: int,
        basis: Sequence[FieldElement] | None = None,
    ):
        if degree < 1:
            raise ValueError(f"bad exponent: {degree}")
        self.base = base
        self.degree = degree
        self.top = make_field(base.p, base.e * degree)
        self._z_pows = self._locate_subfield()
        self._solver = self._build_to_base_solver()
        if basis is None:
            g = self.top.from_coeffs((0, 1)) if self.top.e > 1 else self.top.one()
            basis = [g**i for i in range(degree)]
        else:
            basis = list(basis)
            if len(basis) != degree:
                raise ValueError("not a basis")
            for b in basis:
                if b.spec != self.top:
                    raise ValueError("field mismatch")
        self.basis: tuple[FieldElement, ...] = tuple(basis)
        if not self._is_q_basis(self.basis):
            raise ValueError("not a basis")
        self._dual_basis: tuple[FieldElement, ...] | None = None

    # -- subfield embedding --

    def _locate_subfield(self) -> tuple[FieldElement, ...]:
        """Powers z^0..z^{e-1} of a root z of the base modulus inside the top field."""
        base, top = self.base, self.top
        if base.e == 1:
            return (top.one(),)
        p, dim = base.p, top.e
        # Matrix of Frobenius^e - identity over GF(p), columns = images of g^j.
        g = top.from_coeffs((0, 1))
        cols = []
        for j in range(dim):
            img = (g**j) ** (p**base.e)
            cols.append(list(img.coeffs))
        rows = [[cols[j][i] % p for j in range(dim)] for i in range(dim)]
        for i in range(dim):
            rows[i][i] = (rows[i][i] - 1) % p
        rows, pivots = _rref_mod_p(rows, p)
        free = [c for c in range(dim) if c not in pivots]
        if len(free) != base.e:
            raise AssertionError("subfield of the wrong size")
        # Kernel basis via the standard free-variable construction.
        kernel = []
        for f in free:
            vec = [0] * dim
            vec[f] = 1
            for row, pc in zip(rows, pivots):
                vec[pc] = (-row[f]) % p
            kernel.append(vec)
        # Scan the q subfield elements in canonical top-field order for a root.
        candidates = []
        for code in range(base.order):
            digits = []
            v = code
            for _ in range(base.e):
                digits.append(v % p)
                v //= p
            vec = [0] * dim
            for d, kv in zip(digits, kernel):
                if d:
                    vec = [(a + d * b) % p for a, b in zip(vec, kv)]
            candidates.append(top.from_coeffs(vec))
        candidates.sort(key=lambda x: x.to_int())
        modulus = self.base.modulus
        for z in candidates:
            acc = top.zero()
            zp = top.one()
            for c in modulus:
                if c:
                    acc = acc + top.from_coeffs((c,)) * zp
                zp = zp * z
            if acc.is_zero():
                return tuple(z**i for i in range(base.e))
        raise AssertionError("base modulus has no root in the top field")

    def _build_to_base_solver(self):
        """Precompute RREF data solving vec(x) = sum_i c_i * vec(z^i) over GF(p)."""
        p, dim, e = self.base.p, self.top.e, self.base.e
        aug = []
        for r in range(dim):
            row = [self._z_pows[i].coeffs[r] for i in range(e)]
            row += [1 if c == r else 0 for c in range(dim)]
            aug.append(row)
        rows, pivots = _rref_mod_p(aug, p)
        return rows, pivots

    def embed(self, a: FieldElement) -> FieldElement:
        """Image of a base-field element inside the top field."""
        if a.spec != self.base:
            raise ValueError("field mismatch")
        acc = self.top.zero()
        for c, zp in zip(a.coeffs, self._z_pows):
            if c:
                acc = acc + self.top.from_coeffs((c,)) * zp
        return acc

    def to_base(self, x: FieldElement) -> FieldElement:
        """Preimage of a top-field element lying in the embedded GF(q)."""
        if x.spec != self.top:
            raise ValueError("field mismatch")
        p, e, dim = self.base.p, self.base.e, self.top.e
        rows, pivots = self._solver
        rhs = [0] * len(rows)
        for i, row in enumerate(rows):
            rhs[i] = sum(row[e + c] * x.coeffs[c] for c in range(dim)) % p
        coeffs = [0] * e
        # Pivots inside the coefficient block recover c; pivots in the
        # transform block are consistency constraints (x must lie in GF(q)).
        for row_idx, pc in enumerate(pivots):
            if pc < e:
                coeffs[pc] = rhs[row_idx]
            elif rhs[row_idx] % p:
                raise ValueError("element is not in the base field")
        return self.base.from_coeffs(coeffs)

    def _is_q_basis(self, elems: Sequence[FieldElement]) -> bool:
        """GF(q)-independence via GF(p)-rank of {z^s * b_j}."""
        p = self.base.p
        rows = []
        for b in elems:
            for zp in self._z_pows:
                rows.append(list((zp * b).coeffs))
        _, pivots = _rref_mod_p(rows, p)
        return len(pivots) == len(elems) * self.base.e

    # -- trace and dual basis --

    def trace(self, x: FieldElement) -> FieldElement:
        """Relative trace onto GF(q): sum of the m conjugates x^(q^i)."""
        if x.spec != self.top:
            raise ValueError("field mismatch")
        q = self.base.order
        acc = x
        conj = x
        for _ in range(self.degree - 1):
            conj = conj**q
            acc = acc + conj
        return self.to_base(acc)

    def dual_basis(self) -> tuple[FieldElement, ...]:
        """The unique basis (b_j*) with trace(b_i * b_j*) = 1 iff i == j."""
        if self._dual_basis is not None:
            return self._dual_basis
        m = self.degree
        gram = [[self.trace(self.basis[i] * self.basis[j]) for j in range(m)] for i in range(m)]
        inv = _invert_field_matrix(gram, self.base)
        if inv is None:
            raise ValueError("not a basis")
        dual = []
        for j in range(m):
            acc = self.top.zero()
            for k in range(m):
                if not inv[k][j].is_zero():
                    acc = acc + self.embed(inv[k][j]) * self.basis[k]
            dual.append(acc)
        self._dual_basis = tuple(dual)
        return self._dual_basis

    def with_basis(self, basis: Sequence[FieldElement]) -> ExtensionTower:
        """Same tower over a different ordered basis."""
        return ExtensionTower(self.base, self.degree, basis)

    def __repr__(self) -> str:
        return f"ExtensionTower({self.base.description()}, degree={self.degree})"


def _invert_field_matrix(
    mat: list[list[FieldElement]], spec: FieldSpec
) -> list[list[FieldElement]] | None:
    """Gauss-Jordan inverse of a square matrix of field elements, or None."""
    n = len(mat)
    work = [list(row) for row in mat]
    inv = [[spec.one() if i == j else spec.zero() for j in range(n)] for i in range(n)]
    for c in range(n):
        pr = next((i for i in range(c, n) if not work[i][c].is_zero()), None)
        if pr is None:
            return None
        work[c], work[pr] = work[pr], work[c]
        inv[c], inv[pr] = inv[pr], inv[c]
        scale = work[c][c].inverse()
        work[c] = [v * scale for v in work[c]]
        inv[c] = [v * scale for v in inv[c]]
        for i in range(n):
            if i != c and not work[i][c].is_zero():
                f = work[i][c]
                work[i] = [a - f * b for a, b in zip(work[i], work[c])]
                inv[i] = [a - f * b for a, b in zip(inv[i], inv[c])]
    return inv


def trace_to_base(tower: ExtensionTower, x: FieldElement) -> FieldElement:
    """Trace of a top-field element down to the tower's base field."""
    return tower.trace(x)


def dual_basis(tower: ExtensionTower) -> tuple[FieldElement, ...]:
    """Trace-dual of the tower's ordered basis."""
    return tower.dual_basis()
