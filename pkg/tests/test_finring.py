from itertools import product

import pytest

from mwkit.finring import (
    GaloisField,
    GaloisRing,
    ProductRing,
    RingError,
    RingSpecError,
    Zmod,
    elementary_factorization,
    mat2_mul,
    parse_ring_spec,
    smallest_irreducible,
)


def test_zmod_basics():
    r = Zmod(12)
    assert r.card == 12
    assert [str(u) for u in r.units()] == ["1", "5", "7", "11"]
    assert (r.from_int(7) * r.from_int(7)).coords == 1
    assert r.from_int(5).inverse() == r.from_int(5)


def test_zmod_4_and_gf_units():
    assert [u.coords for u in Zmod(4).units()] == [1, 3]
    f4 = GaloisField(2, 2)
    assert f4.card == 4
    assert len(f4.units()) == 3


def test_galois_field_canonical_moduli():
    assert smallest_irreducible(2, 2) == (1, 1, 1)  # x^2+x+1
    assert smallest_irreducible(3, 2) == (1, 0, 1)  # x^2+1
    assert smallest_irreducible(2, 3) == (1, 1, 0, 1)  # x^3+x+1
    assert GaloisField(3, 2).modulus == (1, 0, 1)


def test_galois_field_explicit_modulus_checked():
    f9 = GaloisField(3, 2, (1, 0, 1))
    assert f9.card == 9
    with pytest.raises(RingError, match="reducible"):
        GaloisField(3, 2, (2, 0, 1))  # x^2+2 = (x+1)(x+2) over Z/3
    with pytest.raises(RingError, match="monic"):
        GaloisField(3, 2, (1, 1))


def test_construction_errors():
    with pytest.raises(RingError, match="at least 2"):
        Zmod(1)
    with pytest.raises(RingError, match="bound"):
        Zmod(1 << 17)
    with pytest.raises(RingError, match="bound"):
        GaloisField(2, 17)
    with pytest.raises(RingError, match="not prime"):
        GaloisField(6, 1)


def test_galois_ring_structure():
    gr = GaloisRing(2, 2, 2)  # Z/4[x]/(x^2+x+1)
    assert gr.card == 16
    assert gr.modulus == (1, 1, 1)
    assert len(gr.units()) == 12
    # residue map onto GF(4)
    f4 = gr.residue_field
    assert f4.card == 4
    x = gr.gen()
    assert gr.residue(x) == f4.gen()
    assert gr.residue(gr.from_int(2)) == f4.zero
    # x^2 = -x-1 = 3x+3 and (x^2)^2 = x
    x2 = x * x
    assert x2.coords == (3, 3)
    assert (x2 * x2) == x


def test_galois_ring_inverses():
    gr = GaloisRing(2, 2, 3)
    assert gr.card == 64
    for u in gr.units():
        assert u * u.inverse() == gr.one
    for el in gr.elements():
        if not el.is_unit():
            assert gr.inverse_or_none(el) is None


def test_ring_axioms_exhaustive(ring_family):
    for ring in ring_family:
        assert ring.card <= 256
        els = list(ring.elements())
        for a, b in product(els, repeat=2):
            assert a + b == b + a
            assert a * b == b * a
        for a, b, c in product(els, repeat=3):
            assert (a + b) + c == a + (b + c)
            assert (a * b) * c == a * (b * c)
            assert a * (b + c) == a * b + a * c


def test_units_match_brute_force(ring_family):
    for ring in ring_family:
        els = list(ring.elements())
        brute = {x for x in els if any(x * y == ring.one for y in els)}
        assert set(ring.units()) == brute


def test_unit_squares(ring_family):
    assert {u.coords for u in Zmod(8).unit_squares()} == {1}
    assert {u.coords for u in Zmod(4).unit_squares()} == {1}
    assert {u.coords for u in Zmod(3).unit_squares()} == {1}
    for ring in ring_family:
        squares = ring.unit_squares()
        units = set(ring.units())
        assert squares <= units
        for s, t in product(squares, repeat=2):
            assert s * t in squares


def test_elementary_factorization_examples():
    z12 = Zmod(12)
    word = elementary_factorization(z12, z12.from_int(5))
    prod_m = ((z12.one, z12.zero), (z12.zero, z12.one))
    for m in word:
        prod_m = mat2_mul(prod_m, m)
    assert prod_m == ((z12.from_int(5), z12.zero), (z12.zero, z12.from_int(5)))

    f7 = Zmod(7)
    word = elementary_factorization(f7, f7.from_int(3))
    prod_m = ((f7.one, f7.zero), (f7.zero, f7.one))
    for m in word:
        prod_m = mat2_mul(prod_m, m)
    assert prod_m == ((f7.from_int(3), f7.zero), (f7.zero, f7.from_int(5)))


def test_elementary_factorization_identity_case():
    f5 = Zmod(5)
    word = elementary_factorization(f5, f5.one)
    prod_m = ((f5.one, f5.zero), (f5.zero, f5.one))
    for m in word:
        prod_m = mat2_mul(prod_m, m)
    assert prod_m == ((f5.one, f5.zero), (f5.zero, f5.one))


def test_elementary_factorization_rejects_non_units():
    with pytest.raises(RingError):
        elementary_factorization(Zmod(12), Zmod(12).from_int(4))


def test_product_ring():
    r = ProductRing([Zmod(4), Zmod(3)])
    assert r.card == 12
    assert len(r.units()) == 4
    a = r.one + r.one
    assert str(a) == "(2,2)"
    assert r.spec_string() == "prod(Z/4,Z/3)"


def test_parse_ring_spec():
    assert parse_ring_spec("Z/12").spec_string() == "Z/12"
    assert parse_ring_spec("GF(3^2)").card == 9
    assert parse_ring_spec("GF(9)").card == 9
    assert parse_ring_spec("GF(3^2;x^2+1)").modulus == (1, 0, 1)
    assert parse_ring_spec("GR(4,2)").spec_string() == "GR(2^2,2)"
    assert parse_ring_spec("GR(2^2,2)").card == 16
    assert parse_ring_spec("prod(Z/4,Z/3)").card == 12
    assert parse_ring_spec(" Z/7 ").card == 7


def test_parse_ring_spec_errors_carry_token():
    with pytest.raises(RingSpecError) as exc:
        parse_ring_spec("GF(6^2)")
    assert "6" in exc.value.token
    with pytest.raises(RingSpecError):
        parse_ring_spec("Q/4")
    with pytest.raises(RingSpecError):
        parse_ring_spec("Z/x")


def test_enumeration_order_is_stable():
    f9 = GaloisField(3, 2)
    first = [el.coords for el in f9.elements()]
    second = [el.coords for el in f9.elements()]
    assert first == second
    assert first[0] == (0, 0)
    assert len(first) == 9


def test_cross_instance_element_equality():
    a = parse_ring_spec("Z/7").from_int(3)
    b = parse_ring_spec("Z/7").from_int(3)
    assert a == b and hash(a) == hash(b)
    c = Zmod(5).from_int(3)
    assert a != c
    with pytest.raises(RingError, match="mismatch"):
        a + c
