from fractions import Fraction

import pytest

from modlat import fixtures
from modlat.codes import (ALL_ELEMS, CodeOverR, RingElem,
                          check_hermitian_self_dual, construction_a_gram,
                          coset_theta, enumerate_codewords,
                          length_weight_enumerator, length_of, lwe_pretty,
                          theta_from_lwe)
from modlat.errors import EnumerationTooLarge
from modlat.lattice import theta_coefficients
from modlat.qseries import first_mismatch
from modlat.theta import jacobi_theta3


def fixture_code():
    return CodeOverR.from_pairs(fixtures.PSOLE_DIM8_GENERATOR)


def test_length_table():
    assert length_of(RingElem(0, 0)) == 0
    assert length_of(RingElem(1, 0)) == 1
    assert length_of(RingElem(2, 0)) == 1
    assert length_of(RingElem(0, 1)) == 2
    assert length_of(RingElem(0, 2)) == 2
    for a in (1, 2):
        for b in (1, 2):
            assert length_of(RingElem(a, b)) == 3


def test_ring_structure():
    assert len(ALL_ELEMS) == 9
    v = RingElem(0, 1)
    assert v * v == RingElem(1, 0)
    one = RingElem(1, 0)
    x = RingElem(2, 1)
    assert x * one == x
    assert x + (-x) == RingElem(0, 0)
    assert v.conj() == RingElem(0, 2)
    for r in ALL_ELEMS:
        assert length_of(r) == length_of(r.conj())


def test_parse_elements():
    assert RingElem.parse("1+v") == RingElem(1, 1)
    assert RingElem.parse("2v") == RingElem(0, 2)
    assert RingElem.parse("0") == RingElem(0, 0)
    assert RingElem.parse("2,1") == RingElem(2, 1)


def test_enumerate_fixture_code():
    words = enumerate_codewords(fixture_code())
    assert len(words) == 81
    # closure under scalar multiplication by every ring element
    ws = set(words)
    for w in list(ws)[:10]:
        for r in ALL_ELEMS:
            assert tuple(r * x for x in w) in ws


def test_enumerate_edge_cases():
    zero = CodeOverR.from_pairs([[(0, 0), (0, 0)]])
    assert enumerate_codewords(zero) == {((0, 0) and RingElem(0, 0),
                                          RingElem(0, 0))} or \
        len(enumerate_codewords(zero)) == 1
    full = CodeOverR.from_pairs([[(1, 0)]])
    assert len(enumerate_codewords(full)) == 9
    with pytest.raises(EnumerationTooLarge):
        enumerate_codewords(fixture_code(), budget=10)


def test_lwe_polynomial():
    lwe = length_weight_enumerator(fixture_code())
    assert sum(lwe.values()) == 81
    assert lwe[(4, 0, 0, 0)] == 1
    assert lwe_pretty(lwe) == ("a^4 + 4a^2d^2 + 16abcd + 8ad^3 + 8b^3d"
                               + " + 4b^2c^2 + 24bcd^2 + 8c^3d + 8d^4")


def test_lwe_edge_cases():
    zero = CodeOverR.from_pairs([[(0, 0), (0, 0), (0, 0)]])
    assert length_weight_enumerator(zero) == {(3, 0, 0, 0): 1}
    full = CodeOverR.from_pairs([[(1, 0)]])
    assert length_weight_enumerator(full) == \
        {(1, 0, 0, 0): 1, (0, 1, 0, 0): 2, (0, 0, 1, 0): 2, (0, 0, 0, 1): 4}


def test_self_dual_check():
    ok, cert = check_hermitian_self_dual(fixture_code())
    assert ok, cert
    full = CodeOverR.from_pairs([[(1, 0), (0, 0)], [(0, 0), (1, 0)]])
    assert not check_hermitian_self_dual(full)[0]
    zero2 = CodeOverR.from_pairs([[(0, 0), (0, 0)]])
    assert not check_hermitian_self_dual(zero2)[0]


def test_construction_a_gram_fixture():
    g = construction_a_gram(fixture_code())
    assert g.n == 8
    assert g.is_integral()
    assert not g.is_even()
    assert g.determinant() == 16
    assert theta_coefficients(g, 4) == [(0, 1), (1, 0), (2, 32), (3, 128),
                                        (4, 240)]


def test_construction_a_zero_code():
    zero = CodeOverR.from_pairs([[(0, 0)]])
    with pytest.warns(UserWarning):
        g = construction_a_gram(zero)
    assert g.entries == ((Fraction(3), Fraction(0)),
                         (Fraction(0), Fraction(6)))


def test_construction_a_full_code_non_integral():
    full = CodeOverR.from_pairs([[(1, 0)]])
    with pytest.warns(UserWarning):
        g = construction_a_gram(full)
    assert not g.is_integral()
    assert g.determinant() == Fraction(2, 9)
    assert sorted(x for row in g.entries for x in row if x) == \
        [Fraction(1, 3), Fraction(2, 3)]


def test_theta_from_lwe_fixture():
    lwe = length_weight_enumerator(fixture_code())
    s = theta_from_lwe(lwe, 5)
    assert [s.coeff_at(e) for e in range(5)] == [1, 0, 32, 128, 240]


def test_theta_from_lwe_zero_code():
    s = theta_from_lwe({(2, 0, 0, 0): 1}, 12)
    theta0 = coset_theta(0, 12)
    assert first_mismatch(s, theta0 * theta0) is None


def test_lwe_gram_oracle_equivalence():
    code = fixture_code()
    s = theta_from_lwe(length_weight_enumerator(code), 7)
    g = construction_a_gram(code)
    for m, c in theta_coefficients(g, 6):
        assert s.coeff_at(m) == c


def test_coset_completeness():
    order = Fraction(12)
    total = (coset_theta(0, order)
             + coset_theta(1, order).scalar_mul(2)
             + coset_theta(2, order).scalar_mul(2)
             + coset_theta(3, order).scalar_mul(4))
    full = (jacobi_theta3(order, Fraction(1, 3))
            * jacobi_theta3(order, Fraction(2, 3)))
    assert first_mismatch(total, full) is None
