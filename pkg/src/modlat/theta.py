"""Named q-expansions: Jacobi thetas, Dedekind eta, and the basis forms.

Everything is exact; see `qseries` for the q = e^{pi*i*tau} convention.
Composite forms are memoized per (name, scale, order); the cache is
fill-once and idempotent, so concurrent reads are safe.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .qseries import DEFAULT_ORDER, QSeries, first_mismatch

#: Stable CLI-facing identifiers for every named form.
FORM_NAMES = (
    "theta2", "theta3", "theta4", "eta",
    "Theta_D4", "Delta_16", "Theta_A2", "Delta_12",
    "Theta_E8", "Delta_24", "f1_l2", "Delta_4",
)


@lru_cache(maxsize=None)
def jacobi_theta2(order=DEFAULT_ORDER, scale=Fraction(1)):
    """theta_2(scale*tau): sum over m of q^{scale*(m+1/2)^2}."""
    order, scale = Fraction(order), Fraction(scale)
    terms = []
    m = 0
    while scale * Fraction((2 * m + 1) ** 2, 4) < order:
        terms.append((scale * Fraction((2 * m + 1) ** 2, 4), Fraction(2)))
        m += 1
    return QSeries.from_terms(terms, order)


@lru_cache(maxsize=None)
def jacobi_theta3(order=DEFAULT_ORDER, scale=Fraction(1)):
    """theta_3(scale*tau): sum over m of q^{scale*m^2}."""
    order, scale = Fraction(order), Fraction(scale)
    terms = [(Fraction(0), Fraction(1))]
    m = 1
    while scale * m * m < order:
        terms.append((scale * m * m, Fraction(2)))
        m += 1
    return QSeries.from_terms(terms, order)


@lru_cache(maxsize=None)
def jacobi_theta4(order=DEFAULT_ORDER, scale=Fraction(1)):
    """theta_4(scale*tau): sum over m of (-q)^{scale*m^2}... signs (-1)^m."""
    order, scale = Fraction(order), Fraction(scale)
    terms = [(Fraction(0), Fraction(1))]
    m = 1
    while scale * m * m < order:
        terms.append((scale * m * m, Fraction(2) * (-1) ** m))
        m += 1
    return QSeries.from_terms(terms, order)


@lru_cache(maxsize=None)
def eta(order=DEFAULT_ORDER, scale=Fraction(1)):
    """Dedekind eta(scale*tau) = q^{scale/12} * prod (1 - q^{2*m*scale}).

    The factor (1 - q^{2m*scale}) only touches exponents >= 2m*scale, so
    factors with 2m*scale + scale/12 >= order cannot affect the kept
    coefficients and are dropped.
    """
    order, scale = Fraction(order), Fraction(scale)
    shift = scale / 12
    out = QSeries.from_terms([(shift, 1)], order)
    m = 1
    while 2 * m * scale + shift < order:
        out = out * QSeries.from_terms([(0, 1), (2 * m * scale, -1)], order)
        m += 1
    return out


def _theta_d4(order):
    t3 = jacobi_theta3(order)
    t4 = jacobi_theta4(order)
    return Fraction(1, 2) * (t3 ** 4 + t4 ** 4)


def _delta_16(order):
    return (eta(order) * eta(order, Fraction(2))) ** 8


def _theta_a2(order):
    return (jacobi_theta2(order, Fraction(2)) * jacobi_theta2(order, Fraction(6))
            + jacobi_theta3(order, Fraction(2)) * jacobi_theta3(order, Fraction(6)))


def _delta_12(order):
    return (eta(order) * eta(order, Fraction(3))) ** 6


def _theta_e8(order):
    # Standard form for the 8-dim even unimodular lattice theta series;
    # validated against the E8 enumeration oracle in the test suite.
    t2 = jacobi_theta2(order)
    t3 = jacobi_theta3(order)
    t4 = jacobi_theta4(order)
    return Fraction(1, 2) * (t2 ** 8 + t3 ** 8 + t4 ** 8)


def _delta_24(order):
    return eta(order) ** 24


def _f1_l2(order):
    return jacobi_theta3(order) * jacobi_theta3(order, Fraction(2))


def _delta_4(order):
    return Fraction(1, 4) * (jacobi_theta2(order, Fraction(2)) ** 2
                             * jacobi_theta4(order) ** 2)


_BUILDERS = {
    "theta2": lambda order: jacobi_theta2(order),
    "theta3": lambda order: jacobi_theta3(order),
    "theta4": lambda order: jacobi_theta4(order),
    "eta": lambda order: eta(order),
    "Theta_D4": _theta_d4,
    "Delta_16": _delta_16,
    "Theta_A2": _theta_a2,
    "Delta_12": _delta_12,
    "Theta_E8": _theta_e8,
    "Delta_24": _delta_24,
    "f1_l2": _f1_l2,
    "Delta_4": _delta_4,
}


@lru_cache(maxsize=None)
def expand(name, order=DEFAULT_ORDER, scale=Fraction(1)):
    """q-expansion of a named form at argument scale*tau, correct below order."""
    order, scale = Fraction(order), Fraction(scale)
    if name not in _BUILDERS:
        raise KeyError("unknown form %r; known: %s" % (name, ", ".join(FORM_NAMES)))
    if order <= 0:
        raise ValueError("order must be positive")
    if scale != 1:
        return _BUILDERS[name](order / scale).scale_argument(scale)
    return _BUILDERS[name](order)


def eta_quotient(numerator_scales, denominator_scales, order=DEFAULT_ORDER):
    """Product of eta(c*tau)^e factors divided by another such product.

    Each argument is a list of (scale, exponent) pairs with positive
    integer exponents.  The division goes through `invert_unit`, which
    costs 2*e0 of truncation where e0 is the denominator's leading
    exponent; the inputs are expanded with that much headroom so the
    result is correct below `order`.
    """
    order = Fraction(order)
    den = [(Fraction(c), int(e)) for c, e in denominator_scales]
    num = [(Fraction(c), int(e)) for c, e in numerator_scales]
    e0 = sum((c * e for c, e in den), Fraction(0)) / 12
    work = order + 2 * e0
    p = QSeries.one(work)
    for c, e in num:
        p = p * eta(work, c) ** e
    d = QSeries.one(work)
    for c, e in den:
        d = d * eta(work, c) ** e
    return p * d.invert_unit()


def split_residue_theta(residue, scale=Fraction(1), order=DEFAULT_ORDER):
    """Theta series of the residue classes of Z modulo 3, squared exponents.

    residue 0: sum over m of q^{scale*(3m)^2} = theta3(9*scale*tau);
    residue 1: sum over m of q^{scale*(3m+1)^2}
             = (theta3(scale*tau) - theta3(9*scale*tau)) / 2.
    """
    scale, order = Fraction(scale), Fraction(order)
    if residue not in (0, 1):
        raise ValueError("residue must be 0 or 1")
    if residue == 0:
        return jacobi_theta3(order, 9 * scale)
    return Fraction(1, 2) * (jacobi_theta3(order, scale)
                             - jacobi_theta3(order, 9 * scale))


def verify_theta_eta_identities(order=Fraction(12)):
    """Check the three theta/eta product identities as exact expansions.

    Returns {name: (passed, first mismatching exponent or None)}.
    """
    order = Fraction(order)
    checks = {
        "theta2 = 2*eta(2t)^2/eta(t)": (
            jacobi_theta2(order),
            2 * eta_quotient([(2, 2)], [(1, 1)], order)),
        "theta3 = eta(t)^5/(eta(t/2)^2*eta(2t)^2)": (
            jacobi_theta3(order),
            eta_quotient([(1, 5)], [(Fraction(1, 2), 2), (2, 2)], order)),
        "theta4 = eta(t/2)^2/eta(t)": (
            jacobi_theta4(order),
            eta_quotient([(Fraction(1, 2), 2)], [(1, 1)], order)),
    }
    report = {}
    for name, (lhs, rhs) in checks.items():
        miss = first_mismatch(lhs, rhs)
        report[name] = (miss is None, miss)
    return report
