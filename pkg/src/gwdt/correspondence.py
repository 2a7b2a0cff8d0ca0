"""Leading-order GW/DT comparison for the class beta_0 + f.

After ``e^{iu} = -q`` both sides of

    (-i)^(-K.beta) Z_GW  =  (-q)^(K.beta / 2) Z_DT'

are q-series; the check compares their lowest exponent and its coefficient.
Half-integer powers of ``-q`` use the branch ``(-q)^(m/2) = (i q^(1/2))^m``,
the same one :func:`gwdt.series.phi_to_q` uses for ``phi``.

``K.beta`` for ``beta = beta_0 + f`` is ``2g - 5 - k1 - k2``: adjunction on the
section (normal bundle ``L1 + L2``) gives ``K.beta_0 = 2g - 2 - k1 - k2`` and a
fibre line has ``K.f = -3``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .algebra import RatFunc, agree_at_points, random_points, ratfunc_eq
from .localization import n_dt
from .series import HalfExp, QSeries, i_power, leading_term, mcmahon, phi_to_q
from .tqft import GwInput, Operators, z_trace


def k_dot_beta(g: int, k1: int, k2: int) -> int:
    return 2 * g - 5 - k1 - k2


def _check(g: int, k1: int, k2: int) -> None:
    if g < 1:
        raise ValueError(f"genus must be >= 1 (got g={g})")
    if k1 >= -1 or k2 >= -1:
        raise ValueError(f"need k1, k2 < -1 (got k1={k1}, k2={k2})")


def expected_exponent(k1: int, k2: int) -> HalfExp:
    return HalfExp(-(k1 + k2 + 3))


def lhs_series(g: int, k1: int, k2: int, trunc: HalfExp | None = None, ops: Operators | None = None) -> QSeries:
    """``(-i)^(-K.beta) Z_GW`` as a q-series."""
    _check(g, k1, k2)
    z = z_trace(GwInput(g, k1, k2, 1), ops)
    if trunc is None:
        trunc = expected_exponent(k1, k2) + HalfExp(2)
    # (-i)^(-m) = i^m
    return phi_to_q(z, trunc) * RatFunc.const(i_power(k_dot_beta(g, k1, k2)))


def rhs_series(g: int, k1: int, k2: int, mcmahon_exponent: int = 0) -> QSeries:
    """``(-q)^(K.beta/2) M(-q)^(-e) Z_DT`` with only the leading DT term known.

    ``Z_DT = N q^(1-g) + O(q^(2-g))``.  The McMahon exponent ``e`` is not
    needed at leading order since ``M(-q) = 1 + O(q)``; it is a parameter so
    that independence can be checked.
    """
    _check(g, k1, k2)
    kb = k_dot_beta(g, k1, k2)
    z_dt = QSeries.monomial(n_dt(g, k1, k2), HalfExp(2 * (1 - g)), HalfExp(2 * (2 - g)))
    reduced = z_dt * mcmahon(HalfExp(2), mcmahon_exponent, negate_q=True)
    # (-q)^(kb/2) = i^kb q^(kb/2)
    return reduced.shift(HalfExp(kb)) * RatFunc.const(i_power(kb))


def lhs_leading(g: int, k1: int, k2: int, ops: Operators | None = None) -> tuple[HalfExp, RatFunc]:
    return leading_term(lhs_series(g, k1, k2, ops=ops))


def rhs_leading(g: int, k1: int, k2: int, mcmahon_exponent: int = 0) -> tuple[HalfExp, RatFunc]:
    return leading_term(rhs_series(g, k1, k2, mcmahon_exponent))


@dataclass(frozen=True)
class CorrReport:
    g: int
    k1: int
    k2: int
    lhs_exp: HalfExp
    rhs_exp: HalfExp
    lhs_coeff: RatFunc
    rhs_coeff: RatFunc
    passed: bool
    eval_ok: bool = True

    def to_json(self) -> dict:
        return {
            "g": self.g,
            "k1": self.k1,
            "k2": self.k2,
            "exp": str(self.lhs_exp) if self.lhs_exp == self.rhs_exp else f"{self.lhs_exp} != {self.rhs_exp}",
            "lhs": self.lhs_coeff.render(),
            "rhs": self.rhs_coeff.render(),
            "pass": self.passed,
        }

    def render(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        return (
            f"g={self.g} k1={self.k1} k2={self.k2}: {verdict}  "
            f"q^({self.lhs_exp}) lhs={self.lhs_coeff.pretty()} rhs={self.rhs_coeff.pretty()}"
        )


def check(g: int, k1: int, k2: int, seed: int | None = None, ops: Operators | None = None) -> CorrReport:
    """Compare leading terms; failures are reported, never raised.

    With ``seed`` set the coefficients are also compared at five random
    rational points, and a disagreement there also fails the report.
    """
    le, lc = lhs_leading(g, k1, k2, ops)
    re_, rc = rhs_leading(g, k1, k2)
    ok = le == re_ and ratfunc_eq(lc, rc)
    eval_ok = True
    if seed is not None:
        eval_ok = agree_at_points(lc, rc, random_points(5, seed))
    return CorrReport(g, k1, k2, le, re_, lc, rc, ok and eval_ok, eval_ok)


def grid(gmax: int, kmin: int, kmax: int, gmin: int = 1):
    for g in range(gmin, gmax + 1):
        for k1 in range(kmin, kmax + 1):
            for k2 in range(kmin, kmax + 1):
                yield g, k1, k2


def reports_json(reports) -> str:
    return json.dumps([r.to_json() for r in reports], indent=2)
