"""Exact theta series of modular lattices and their secrecy functions.

The package computes q-expansions of lattice theta series with exact
rational arithmetic, decomposes them over small modular-form bases at
levels 1, 2 and 3, builds lattices from self-dual codes over F3+vF3,
and evaluates secrecy functions numerically.
"""

from .errors import ModlatError
from .qseries import QSeries
from .theta import FORM_NAMES, eta, eta_quotient, expand, jacobi_theta2, \
    jacobi_theta3, jacobi_theta4, split_residue_theta
from .lattice import CATALOG_NAMES, GramMatrix, catalog, \
    gram_from_generator, hnf_basis, theta_coefficients
from .modform import BasisSpec, ThetaDecomposition, build_basis, \
    expand_decomposition, solve_coefficients
from .codes import CodeOverR, RingElem, check_hermitian_self_dual, \
    construction_a_gram, length_weight_enumerator, theta_from_lwe
from .secrecy import SecrecyEvaluation, ThetaValue, locate_maximum, \
    secrecy_curve, secrecy_function, weak_secrecy_gain

__version__ = "0.1.0"

__all__ = [
    "ModlatError", "QSeries", "FORM_NAMES", "eta", "eta_quotient",
    "expand", "jacobi_theta2", "jacobi_theta3", "jacobi_theta4",
    "split_residue_theta", "CATALOG_NAMES", "GramMatrix", "catalog",
    "gram_from_generator", "hnf_basis", "theta_coefficients", "BasisSpec",
    "ThetaDecomposition", "build_basis", "expand_decomposition",
    "solve_coefficients", "CodeOverR", "RingElem",
    "check_hermitian_self_dual", "construction_a_gram",
    "length_weight_enumerator", "theta_from_lwe", "SecrecyEvaluation",
    "ThetaValue", "locate_maximum", "secrecy_curve", "secrecy_function",
    "weak_secrecy_gain",
]
