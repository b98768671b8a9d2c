"""Exact Grothendieck-Witt arithmetic and quadratic Euler characteristics of symmetric powers of curves."""

from .closed_form import (binom_gen, chi_curve, chi_sym_closed, chi_sym_closed_pm,
                          chi_sym_closed_second, rank_formula)
from .curves import (EtaleAlgebra, SingularCurveClass, a_n_chi_c, chi_c_curve, power_sums,
                     trace_form, trace_gram)
from .errors import *  # noqa: F401,F403
from .fields import (GF, QQ, RR, FieldDesc, FunctionField, SquareClass, function_class,
                     parse_field, square_class)
from .gw import (INF, GWElement, add, as_pm_counts, discriminant, from_json, gen,
                 hasse_invariant, hilbert_symbol, hyperbolic, invariants, is_equal, mul, neg,
                 normalize, pm, render, signature, specialize_t, to_json)
from .hodge import (admissible_count, check_invariant_basis, chi_sym_oracle, cup,
                    gram_middle, invariant_basis, trace_sym)
from .parse import GWExpr, GWTerm, parse_element, parse_gw, parse_poly, render_expr, to_element
from .power import (GWPowerSeries, a_n, a_n_gen, a_n_neg_lH, a_n_neg_lH_poly, a_series,
                    series_inverse, series_mul, series_pow)
from .quadform import GramMatrix, diagonalize, gram_to_gw

__version__ = "0.1.0"
