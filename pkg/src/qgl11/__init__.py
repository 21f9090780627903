"""Exact computer algebra for the quantum affine superalgebra of gl(1|1).

Scalars are rational functions in q with exact integer arithmetic; algebra
elements are normal-ordered words in the loop generators; all series are
truncated with explicit reliability windows.  The modules provide the Hopf
structure, the Borel pairing, the truncated R-matrix with its verification
battery, evaluation modules and a small expression language.
"""

from .scalars import (QMQI, QONE, QVAR, QZERO, QScalar, coerce_scalar,
                      qbracket, qpow, specialize_q)
from .superalg import (Element, Monomial, TensorElement, gen_C, gen_E, gen_F,
                       gen_h, gen_k1, gen_k2, multiply, phi_mode,
                       tensor_multiply)
from .series import (LaurentSeries, expand_rational, series_exp, series_invert,
                     series_log)
from .hopf import (coproduct, coproduct_z, counit, drinfeld_coproduct,
                   drinfeld_coproduct_closed, gauss_current)
from .pairing import (BLetter, GammaFunction, cartan_pair, gamma_from_element,
                      letter_pair, pair_closed, pair_oracle, pbw_products)
from .matrices import Matrix, MPoly, graded_kron
from .reps import (Representation, baxter_check, current_check, f_series,
                   rcd_matrix, rep_check, rep_pi_a, rep_pi_cd, rep_rho,
                   t_series, tensor_rep, transfer_ops)
from .rmatrix import (build_factor, evaluate_R, kappa, perk_schultz,
                      perk_schultz_series, r_on_legs, r_series, verify_braid,
                      verify_intertwining, verify_quasitriangular)
from .dsl import (ParseError, format_element, format_monomial, format_scalar,
                  format_tensor, parse_element)
from .suites import Report, run_suite

__version__ = "0.1.0"

__all__ = [
    "QMQI", "QONE", "QVAR", "QZERO", "QScalar", "coerce_scalar", "qbracket",
    "qpow", "specialize_q",
    "Element", "Monomial", "TensorElement", "gen_C", "gen_E", "gen_F",
    "gen_h", "gen_k1", "gen_k2", "multiply", "phi_mode", "tensor_multiply",
    "LaurentSeries", "expand_rational", "series_exp", "series_invert",
    "series_log",
    "coproduct", "coproduct_z", "counit", "drinfeld_coproduct",
    "drinfeld_coproduct_closed", "gauss_current",
    "BLetter", "GammaFunction", "cartan_pair", "gamma_from_element",
    "letter_pair", "pair_closed", "pair_oracle", "pbw_products",
    "Matrix", "MPoly", "graded_kron",
    "Representation", "baxter_check", "current_check", "f_series",
    "rcd_matrix", "rep_check", "rep_pi_a", "rep_pi_cd", "rep_rho",
    "t_series", "tensor_rep", "transfer_ops",
    "build_factor", "evaluate_R", "kappa", "perk_schultz",
    "perk_schultz_series", "r_on_legs", "r_series", "verify_braid",
    "verify_intertwining", "verify_quasitriangular",
    "ParseError", "format_element", "format_monomial", "format_scalar",
    "format_tensor", "parse_element",
    "Report", "run_suite",
    "__version__",
]
