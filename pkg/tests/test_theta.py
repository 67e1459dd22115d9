from fractions import Fraction

from modlat.qseries import QSeries, first_mismatch
from modlat.theta import (FORM_NAMES, eta, eta_quotient, expand,
                          jacobi_theta2, jacobi_theta3, jacobi_theta4,
                          split_residue_theta, verify_theta_eta_identities)


def coeffs(series, exps):
    return [series.coeff_at(e) for e in exps]


def test_theta_d4_leading():
    s = expand("Theta_D4", 8)
    assert coeffs(s, (0, 2, 4, 6)) == [1, 24, 24, 96]


def test_delta12_leading():
    s = expand("Delta_12", 8)
    assert coeffs(s, (0, 2, 4, 6)) == [0, 1, -6, 9]


def test_f1_leading():
    s = expand("f1_l2", 4)
    assert coeffs(s, (0, 1, 2, 3)) == [1, 2, 2, 4]


def test_delta4_leading():
    s = expand("Delta_4", 4)
    assert coeffs(s, (0, 1, 2, 3)) == [0, 1, -4, 4]


def test_theta_a2_leading():
    s = expand("Theta_A2", 8)
    assert coeffs(s, (0, 2, 4, 6)) == [1, 6, 0, 6]


def test_delta16_leading():
    s = expand("Delta_16", 8)
    assert coeffs(s, (2, 4, 6)) == [1, -8, 12]


def test_theta_e8_leading():
    s = expand("Theta_E8", 6)
    assert coeffs(s, (0, 2, 4)) == [1, 240, 2160]


def test_eta_quotient_theta2():
    # theta2 = 2 * eta(2t)^2 / eta(t)
    q = eta_quotient([(2, 2)], [(1, 1)], 12)
    assert first_mismatch(q.scalar_mul(2), jacobi_theta2(q.trunc)) is None


def test_eta_quotient_theta4():
    q = eta_quotient([(Fraction(1, 2), 2)], [(1, 1)], 12)
    assert first_mismatch(q, jacobi_theta4(q.trunc)) is None


def test_eta_quotient_trivial():
    q = eta_quotient([(1, 1)], [(1, 1)], 10)
    assert q.coeff_at(0) == 1
    for e in range(1, 6):
        assert q.coeff_at(e) == 0


def test_identities_pass():
    report = verify_theta_eta_identities(12)
    assert len(report) == 3
    for name, (ok, mismatch) in report.items():
        assert ok, "%s failed at %s" % (name, mismatch)


def test_identities_negative_control():
    # corrupt eta by one coefficient and recheck an identity by hand
    e = eta(12)
    bad = e + QSeries.from_terms([(Fraction(25, 12), 1)], e.trunc)
    lhs = bad.scale_argument(2) ** 2 * e.invert_unit()
    mism = first_mismatch(lhs.scalar_mul(2), jacobi_theta2(lhs.trunc))
    assert mism is not None


def test_theta_d4_equals_half_sum():
    t3 = jacobi_theta3(12)
    t4 = jacobi_theta4(12)
    half = (t3 ** 4 + t4 ** 4).scalar_mul(Fraction(1, 2))
    assert first_mismatch(half, expand("Theta_D4", 12)) is None


def test_delta16_two_forms_agree():
    ep = (eta(14) * eta(14, 2)) ** 8
    tp = (jacobi_theta2(14) ** 8 * jacobi_theta3(14) ** 4
          * jacobi_theta4(14) ** 4).scalar_mul(Fraction(1, 256))
    assert first_mismatch(ep, tp) is None


def test_delta4_two_forms_agree():
    tform = (jacobi_theta2(12, 2) ** 2
             * jacobi_theta4(12) ** 2).scalar_mul(Fraction(1, 4))
    assert first_mismatch(tform, expand("Delta_4", 12)) is None


def test_delta4_f2_product_form():
    # Delta_4 = f1^2 * f2 with f2 the eta quotient
    # (eta(t/2) eta(4t) / (eta(t) eta(2t)))^8
    f2 = eta_quotient([(Fraction(1, 2), 8), (4, 8)], [(1, 8), (2, 8)], 16)
    f1 = expand("f1_l2", f2.trunc)
    assert first_mismatch(f1 ** 2 * f2, expand("Delta_4", f2.trunc)) is None


def test_split_residue_zero():
    s = split_residue_theta(0, 1, 40)
    assert coeffs(s, (0, 9, 36)) == [1, 2, 2]
    assert s.coeff_at(1) == 0


def test_split_residue_one_brute_force():
    s = split_residue_theta(1, 1, 120)
    # brute-force half-sum over residues +-1 mod 3
    expect = {}
    for m in range(-50, 51):
        for r in (1, -1):
            e = Fraction((3 * m + r) ** 2)
            if e < 120:
                expect[e] = expect.get(e, Fraction(0)) + Fraction(1, 2)
    got = dict(s.terms())
    assert got == {e: c for e, c in expect.items() if c}


def test_split_residue_scaled():
    s = split_residue_theta(1, Fraction(1, 3), 12)
    assert s.coeff_at(Fraction(1, 3)) == 1
    assert s.coeff_at(Fraction(4, 3)) == 1


def test_basis_forms_counting_series():
    for name in ("Theta_D4", "Theta_A2", "Theta_E8", "f1_l2"):
        s = expand(name, 10)
        assert s.coeff_at(0) == 1
        for e, c in s.terms():
            assert c.denominator == 1 and c >= 0


def test_memoized_expansion_referentially_transparent():
    a = expand("Theta_D4", 10)
    b = expand("Theta_D4", 10)
    assert first_mismatch(a, b) is None
    assert a.to_json() == b.to_json()


def test_form_name_list_is_stable():
    assert FORM_NAMES == ("theta2", "theta3", "theta4", "eta", "Theta_D4",
                          "Delta_16", "Theta_A2", "Delta_12", "Theta_E8",
                          "Delta_24", "f1_l2", "Delta_4")
    t3 = jacobi_theta3(5)
    assert coeffs(t3, (0, 1, 4)) == [1, 2, 2]
