import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from g2div.errors import DivisionByZero, MixedFields, NoSquareRoot, UnsupportedField
from g2div.fields import (
    GF,
    QQ,
    FieldEmbedding,
    FieldSpec,
    find_irreducible,
    is_irreducible_mod_p,
    tonelli_shanks,
)

FIELDS = [QQ(), GF(7), GF(11), GF(1009), GF(7, 2), GF(13, 2), GF(7, 4)]


def _sample(field, rng):
    q = field.order()
    if q is None:
        return field.element(Fraction(rng.randrange(-50, 51), rng.randrange(1, 20)))
    if hasattr(field, "k") and field.k > 1:
        return field.from_coeffs([rng.randrange(field.p) for _ in range(field.k)])
    return field.element(rng.randrange(q))


@pytest.mark.parametrize("field", FIELDS, ids=lambda f: f.short_name())
def test_field_axioms_bulk(field):
    # associativity, distributivity, inverses on >= 10^4 random triples
    rng = random.Random(99)
    one = field.one
    for _ in range(10_000):
        a, b, c = (_sample(field, rng) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + (-a) == field.zero
        if not field.is_zero(a):
            assert a * (one / a) == one


def test_inverse_example_f7(f7):
    assert (f7.element(3) ** -1).value == 5


def test_rational_arithmetic():
    Q = QQ()
    assert Q.element(Fraction(1, 2)) + Q.element(Fraction(1, 3)) == Q.element(Fraction(5, 6))


def test_sqrt_f7_both_roots(f7):
    # exhaustive search of squares mod 7: only 3 and 4 square to 2
    expected = sorted(x.value for x in f7.elements() if (x * x).value == 2)
    roots = f7.sqrt(f7.element(2))
    assert [r.value for r in roots] == expected == [3, 4]


def test_sqrt_matches_exhaustive_search():
    for field in (GF(11), GF(13), GF(7, 2)):
        squares = {}
        for x in field.elements():
            squares.setdefault((x * x).value, []).append(x)
        for a in field.elements():
            roots = field.sqrt(a)
            expected = sorted(squares.get(a.value, []), key=field.sort_key)
            assert list(roots) == expected
            for r in roots:
                assert r * r == a


def test_sqrt_no_root_marker(f7):
    assert f7.sqrt(f7.element(3)) == ()
    with pytest.raises(NoSquareRoot):
        f7.sqrt_exact(f7.element(3))


def test_rational_sqrt():
    Q = QQ()
    r = Q.sqrt(Q.element(Fraction(9, 4)))
    assert [x.value for x in r] == [Fraction(-3, 2), Fraction(3, 2)]
    assert Q.sqrt(Q.element(2)) == ()
    assert Q.sqrt(Q.element(-1)) == ()


def test_tonelli_shanks_nontrivial():
    p = 1009  # p % 4 == 1 exercises the full loop
    for n in (5, 17, 100):
        if pow(n, (p - 1) // 2, p) == 1:
            r = tonelli_shanks(n, p)
            assert r * r % p == n


def test_find_irreducible_examples():
    assert find_irreducible(7, 2) == [1, 0, 1]  # t^2 + 1, root-free mod 7
    assert find_irreducible(11, 1) == [0, 1]
    m = find_irreducible(7, 4)
    assert len(m) == 5 and m[-1] == 1
    assert is_irreducible_mod_p(m, 7)


def test_find_irreducible_rootfree_oracle():
    m = find_irreducible(7, 2)
    vals = [(m[0] + m[1] * x + m[2] * x * x) % 7 for x in range(7)]
    assert 0 not in vals


def test_excluded_characteristics():
    for p in (2, 5):
        with pytest.raises(UnsupportedField):
            FieldSpec("prime", p=p)
    with pytest.raises(UnsupportedField):
        GF(7, 5)


def test_frobenius_fixes_exactly_base():
    for (p, k) in ((7, 2), (11, 2), (7, 4)):
        field = GF(p, k)
        fixed = [e for e in field.elements() if field.frobenius(e) == e]
        assert len(fixed) == p


def test_mixed_fields_rejected():
    with pytest.raises(MixedFields):
        GF(7).element(1) + GF(11).element(1)


def test_division_by_zero():
    with pytest.raises(DivisionByZero):
        GF(7).one / GF(7).zero


def test_field_spec_json_round_trip():
    for spec in (FieldSpec("rational"), FieldSpec("prime", p=7),
                 FieldSpec("extension", p=7, k=2, modulus=(1, 0, 1))):
        assert FieldSpec.from_json(spec.to_json()) == spec


def test_element_string_round_trip():
    for field in FIELDS:
        rng = random.Random(5)
        for _ in range(40):
            a = _sample(field, rng)
            assert field.from_str(field.to_str(a)) == a


def test_embedding_round_trip():
    small = GF(7, 2)
    big = GF(7, 4)
    emb = FieldEmbedding(small, big)
    rng = random.Random(3)
    for _ in range(60):
        a = _sample(small, rng)
        b = _sample(small, rng)
        assert emb.pullback(emb.embed(a)) == a
        assert emb.embed(a * b) == emb.embed(a) * emb.embed(b)
        assert emb.embed(a + b) == emb.embed(a) + emb.embed(b)
    with pytest.raises(MixedFields):
        emb.pullback(big.gen())


@settings(max_examples=200)
@given(st.integers(min_value=-1000, max_value=1000), st.integers(min_value=-1000, max_value=1000))
def test_prime_field_homomorphism_from_integers(a, b):
    F = GF(1009)
    assert F.element(a) + F.element(b) == F.element(a + b)
    assert F.element(a) * F.element(b) == F.element(a * b)
