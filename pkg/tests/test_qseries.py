import random
from fractions import Fraction

import pytest

from modlat.errors import NotInvertible, QueryBeyondTruncation
from modlat.qseries import QSeries, first_mismatch
from modlat.theta import jacobi_theta3, jacobi_theta4


def F(x):
    return Fraction(x)


def random_series(rng, trunc=16):
    terms = []
    for _ in range(rng.randrange(0, 6)):
        num = rng.randrange(0, trunc * 2)
        den = rng.choice((1, 2, 3))
        e = Fraction(num, den)
        if e < trunc:
            terms.append((e, Fraction(rng.randrange(-9, 10),
                                      rng.choice((1, 2, 3)))))
    return QSeries.from_terms(terms, Fraction(trunc))


def test_add_coefficientwise():
    a = QSeries.from_terms([(0, 1), (1, 2)], 8)
    b = QSeries.from_terms([(1, 3), (2, 1)], 8)
    s = a + b
    assert s.coeff_at(0) == 1
    assert s.coeff_at(1) == 5
    assert s.coeff_at(2) == 1


def test_add_zero_identity():
    a = QSeries.from_terms([(0, 1), (3, -7)], 10)
    assert first_mismatch(a + QSeries.zero(10), a) is None


def test_add_theta3_theta4_even_survivors():
    # theta3 + theta4: odd-square exponents cancel, even squares double
    s = jacobi_theta3(10) + jacobi_theta4(10)
    expect = QSeries.from_terms(
        [(m * m, 4) for m in range(1, 4) if m * m < 10 and m % 2 == 0]
        + [(0, 2)], 10)
    assert first_mismatch(s, expect) is None


def test_mul_basic():
    a = QSeries.from_terms([(0, 1), (1, 1)], 8)
    b = QSeries.from_terms([(0, 1), (1, -1)], 8)
    p = a * b
    assert p.coeff_at(0) == 1
    assert p.coeff_at(1) == 0
    assert p.coeff_at(2) == -1


def test_mul_theta3_scaled_product():
    # theta3(3t) * theta3(6t) = 1 + 2q^3 + 2q^6 + ...
    p = jacobi_theta3(12, 3) * jacobi_theta3(12, 6)
    assert p.coeff_at(0) == 1
    assert p.coeff_at(3) == 2
    assert p.coeff_at(6) == 2
    assert p.coeff_at(1) == 0
    assert p.coeff_at(2) == 0


def test_mul_one_identity():
    a = QSeries.from_terms([(F("1/2"), 3), (2, -1)], 9)
    assert first_mismatch(a * QSeries.one(9), a) is None


def test_pow_d4_fourth():
    d4 = QSeries.from_terms([(0, 1), (2, 24), (4, 24), (6, 96)], 8)
    p = d4 ** 4
    assert p.coeff_at(0) == 1
    assert p.coeff_at(2) == 96


def test_pow_zero_and_one():
    s = QSeries.from_terms([(1, 5), (2, -3)], 7)
    assert first_mismatch(s ** 0, QSeries.one(7)) is None
    assert first_mismatch(s ** 1, s) is None


def test_scale_argument_theta3():
    t3 = jacobi_theta3(16)
    scaled = t3.scale_argument(3)
    assert scaled.coeff_at(3) == 2
    assert scaled.coeff_at(12) == 2
    assert scaled.coeff_at(1) == 0
    third = t3.scale_argument(F("1/3"))
    assert third.coeff_at(F("1/3")) == 2
    assert third.den % 3 == 0 or third.coeff_at(F("4/3")) == 2


def test_scale_argument_identity():
    s = QSeries.from_terms([(2, 1), (4, -8)], 8)
    assert first_mismatch(s.scale_argument(1), s) is None


def test_coeff_at_values_and_truncation_error():
    d4 = QSeries.from_terms([(0, 1), (2, 24), (4, 24), (6, 96)], 8)
    assert d4.coeff_at(2) == 24
    assert d4.coeff_at(3) == 0
    d16 = QSeries.from_terms([(2, 1), (4, -8), (6, 12)], 8)
    assert d16.coeff_at(4) == -8
    with pytest.raises(QueryBeyondTruncation):
        d4.coeff_at(8)


def test_invert_geometric():
    a = QSeries.from_terms([(0, 1), (1, -1)], 10)
    inv = a.invert_unit()
    for e in range(8):
        assert inv.coeff_at(e) == 1


def test_invert_shifted_unit():
    a = QSeries.from_terms([(1, 1), (2, 1)], 10)
    inv = a.invert_unit()
    assert inv.leading_exponent() == -1
    prod = a * inv
    assert prod.coeff_at(0) == 1
    for e in range(1, 6):
        assert prod.coeff_at(e) == 0


def test_invert_zero_raises():
    with pytest.raises(NotInvertible):
        QSeries.zero(8).invert_unit()


def test_eta_times_inverse_is_one():
    from modlat.theta import eta
    e = eta(10)
    prod = e * e.invert_unit()
    assert prod.coeff_at(0) == 1
    for e2 in range(1, 6):
        assert prod.coeff_at(e2) == 0


def test_ring_axioms_random():
    rng = random.Random(20260826)
    for _ in range(100):
        a, b, c = (random_series(rng) for _ in range(3))
        assert first_mismatch(a + b, b + a) is None
        assert first_mismatch((a + b) + c, a + (b + c)) is None
        assert first_mismatch(a * b, b * a) is None
        assert first_mismatch((a * b) * c, a * (b * c)) is None
        assert first_mismatch(a * (b + c), a * b + a * c) is None


def test_scale_argument_composes():
    rng = random.Random(7)
    for _ in range(20):
        s = random_series(rng)
        a, b = F("3/2"), F("2/3")
        lhs = s.scale_argument(a).scale_argument(b)
        rhs = s.scale_argument(a * b)
        assert first_mismatch(lhs, rhs) is None


def test_pow_additivity():
    rng = random.Random(99)
    for _ in range(20):
        s = random_series(rng)
        assert first_mismatch(s ** 5, (s ** 2) * (s ** 3)) is None


def test_serialization_round_trips():
    rng = random.Random(4)
    for _ in range(20):
        s = random_series(rng)
        assert first_mismatch(QSeries.from_json(s.to_json()), s) is None
        assert first_mismatch(QSeries.from_text(s.to_text()), s) is None
        again = QSeries.from_json(s.to_json())
        assert again.to_json() == s.to_json()


def test_normalization_minimal_denominator():
    s = QSeries.from_terms([(Fraction(2, 2), 1), (2, 5)], 8)
    assert s.den == 1
