"""Exact equivariant GW and DT computations for P^2-bundles over curves."""

from .algebra import DualP, GaussRat, LinForm, MultiPoly, RatFunc, dual_inverse, ratfunc_eq, t
from .correspondence import CorrReport, check, k_dot_beta, lhs_leading, rhs_leading
from .localization import n_dt, n_dt_closed, obstruction_class
from .series import HalfExp, PhiLaurent, QSeries, leading_term, mcmahon, phi_to_q
from .tqft import GwInput, Op3, build_operators, interleave_sum, z_closed_r1, z_proof_form, z_trace

__version__ = "0.1.0"
