import pytest

from rankmetric import (
    ExtensionTower,
    dual_basis,
    field_for_order,
    field_with_modulus,
    make_field,
    trace_to_base,
)


def test_make_field_prime_fields():
    F2 = make_field(2, 1)
    assert (F2.p, F2.e, F2.modulus) == (2, 1, ())
    F3 = make_field(3, 1)
    assert F3.order == 3


def test_make_field_gf4_unique_modulus():
    # Exhaustive check: x^2 + x + 1 is the only irreducible monic quadratic
    # over GF(2), so the deterministic search must pick it.
    candidates = []
    for c0 in (0, 1):
        for c1 in (0, 1):
            roots = [x for x in (0, 1) if (x * x + c1 * x + c0) % 2 == 0]
            if not roots:
                candidates.append((c0, c1, 1))
    assert candidates == [(1, 1, 1)]
    assert make_field(2, 2).modulus == (1, 1, 1)


def test_make_field_errors():
    with pytest.raises(ValueError, match="not prime"):
        make_field(6, 1)
    with pytest.raises(ValueError, match="bad exponent"):
        make_field(2, 0)


def test_field_with_modulus_validates():
    assert field_with_modulus(2, 2, (1, 1, 1)).order == 4
    with pytest.raises(ValueError, match="irreducible"):
        field_with_modulus(2, 2, (0, 0, 1))  # x^2 = x*x
    with pytest.raises(ValueError, match="monic"):
        field_with_modulus(3, 2, (1, 0, 2))


def test_field_for_order():
    assert field_for_order(8).e == 3
    assert field_for_order(9) == make_field(3, 2)
    with pytest.raises(ValueError):
        field_for_order(6)
    with pytest.raises(ValueError):
        field_for_order(1)


@pytest.mark.parametrize("p,e", [(2, 1), (3, 1), (2, 2), (5, 1), (2, 3), (3, 2), (2, 4)])
def test_field_axioms_exhaustive(p, e):
    """Associativity, distributivity, and inverses for every q <= 16."""
    spec = make_field(p, e)
    elems = list(spec.elements())
    assert len(elems) == spec.order
    one = spec.one()
    for a in elems:
        if not a.is_zero():
            assert a * a.inverse() == one
    for a in elems:
        for b in elems:
            assert a + b == b + a
            assert a * b == b * a
            for c in elems:
                assert (a + b) + c == a + (b + c)
                assert (a * b) * c == a * (b * c)
                assert a * (b + c) == a * b + a * c


def test_element_int_codec_roundtrip():
    spec = make_field(3, 2)
    for code in range(spec.order):
        assert spec.from_int(code).to_int() == code


def test_field_mismatch_raises():
    a = make_field(2, 1).one()
    b = make_field(3, 1).one()
    with pytest.raises(ValueError, match="field mismatch"):
        a + b


def test_division_by_zero_raises():
    spec = make_field(5, 1)
    with pytest.raises(ZeroDivisionError):
        spec.one() / spec.zero()


@pytest.mark.parametrize(
    "p,e,m",
    [(2, 1, 2), (2, 1, 3), (2, 1, 4), (2, 1, 8), (3, 1, 2), (2, 2, 2), (5, 1, 2)],
)
def test_frobenius_fixes_exactly_base(p, e, m):
    """x -> x^q is GF(q)-linear on GF(q^m) and fixes exactly the base field."""
    tower = ExtensionTower(make_field(p, e), m)
    q = tower.base.order
    elems = list(tower.top.elements())
    fixed = [x for x in elems if x**q == x]
    assert len(fixed) == q
    embedded = {tower.embed(a) for a in tower.base.elements()}
    assert set(fixed) == embedded
    # additivity of Frobenius on all pairs, scalar-compatibility on base scalars
    frob = {x: x**q for x in elems}
    for x in elems:
        for y in elems:
            assert frob[x] + frob[y] == (x + y) ** q
    for a in tower.base.elements():
        za = tower.embed(a)
        for x in elems[: min(len(elems), 64)]:
            assert (za * x) ** q == za * frob[x]


@pytest.mark.parametrize("p,e,m", [(2, 1, 2), (2, 1, 3), (3, 1, 2), (2, 2, 2)])
def test_trace_surjective_linear_exhaustive(p, e, m):
    tower = ExtensionTower(make_field(p, e), m)
    elems = list(tower.top.elements())
    hits = {}
    for x in elems:
        t = tower.trace(x)
        hits[t] = hits.get(t, 0) + 1
    # surjective onto GF(q), each value hit q^(m-1) times
    assert len(hits) == tower.base.order
    assert set(hits.values()) == {tower.base.order ** (m - 1)}
    # GF(q)-linearity
    for x in elems[:16]:
        for y in elems[:16]:
            assert tower.trace(x + y) == tower.trace(x) + tower.trace(y)
    for a in tower.base.elements():
        za = tower.embed(a)
        for x in elems[:16]:
            assert tower.trace(za * x) == a * tower.trace(x)


def test_trace_of_zero_and_base_elements():
    tower = ExtensionTower(make_field(3, 1), 2)
    assert tower.trace(tower.top.zero()).is_zero()
    # elements of the base field have trace m*x
    two = tower.base.from_int(2)
    m_as_base = sum([tower.base.one()] * tower.degree, tower.base.zero())
    assert tower.trace(tower.embed(two)) == m_as_base * two


def test_trace_gf4_generator():
    # In GF(4)/GF(2) with w^2 = w + 1: trace(w) = w + w^2 = 1.
    tower = ExtensionTower(make_field(2, 1), 2)
    w = tower.top.from_coeffs((0, 1))
    assert tower.trace(w) == tower.base.one()


@pytest.mark.parametrize("p,e,m", [(2, 1, 2), (2, 1, 3), (3, 1, 2), (2, 2, 2)])
def test_dual_basis_kronecker_property(p, e, m):
    tower = ExtensionTower(make_field(p, e), m)
    dual = dual_basis(tower)
    one, zero = tower.base.one(), tower.base.zero()
    for i in range(m):
        for j in range(m):
            expected = one if i == j else zero
            assert trace_to_base(tower, tower.basis[i] * dual[j]) == expected


def test_dual_of_dual_is_original():
    tower = ExtensionTower(make_field(2, 1), 3)
    dual = tower.dual_basis()
    again = ExtensionTower(tower.base, tower.degree, dual).dual_basis()
    assert again == tower.basis


def test_dual_basis_of_custom_basis():
    base = make_field(2, 1)
    default = ExtensionTower(base, 2)
    g = default.top.from_coeffs((0, 1))
    tower = ExtensionTower(base, 2, [g, default.top.one()])
    dual = tower.dual_basis()
    for i in range(2):
        for j in range(2):
            t = tower.trace(tower.basis[i] * dual[j])
            assert t == (base.one() if i == j else base.zero())


def test_dependent_basis_rejected():
    base = make_field(2, 1)
    default = ExtensionTower(base, 2)
    one = default.top.one()
    with pytest.raises(ValueError, match="not a basis"):
        ExtensionTower(base, 2, [one, one])


def test_tower_field_mismatch():
    t1 = ExtensionTower(make_field(2, 1), 2)
    t2 = ExtensionTower(make_field(3, 1), 2)
    with pytest.raises(ValueError, match="field mismatch"):
        t1.trace(t2.top.one())


def test_field_description_serialization():
    assert make_field(3, 1).description() == "GF(3)"
    assert make_field(2, 2).description() == "GF(2^2; modulus=1,1,1)"


def test_element_str_and_parse_roundtrip():
    for spec in (make_field(5, 1), make_field(2, 2), make_field(3, 2)):
        for x in spec.elements():
            assert spec.parse_element(str(x)) == x
