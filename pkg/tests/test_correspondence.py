import json

import pytest

from conftest import GRID
from gwdt.algebra import I, RatFunc, t
from gwdt.correspondence import (
    CorrReport,
    check,
    expected_exponent,
    grid,
    k_dot_beta,
    lhs_leading,
    lhs_series,
    reports_json,
    rhs_leading,
    rhs_series,
)
from gwdt.series import HalfExp

t0, t1, t2 = t(0), t(1), t(2)
P = (t0 - t1) * (t0 - t2) * (8 * t0 - 4 * t1 - 4 * t2)
SAMPLE = GRID[::6]


def test_k_dot_beta():
    assert k_dot_beta(2, -2, -2) == 3
    assert k_dot_beta(1, -2, -2) == 1


class TestLeading:
    def test_lhs_g2(self):
        assert lhs_leading(2, -2, -2) == (HalfExp(1), P * RatFunc.const(-I))

    def test_rhs_g2(self):
        assert rhs_leading(2, -2, -2) == (HalfExp(1), P * RatFunc.const(-I))

    def test_g1(self):
        expected = (HalfExp(1), (4 * t0 - 2 * t1 - 2 * t2) * RatFunc.const(I))
        assert lhs_leading(1, -2, -2) == expected == rhs_leading(1, -2, -2)

    @pytest.mark.parametrize("g,k1,k2", SAMPLE)
    def test_exponent(self, g, k1, k2):
        e = expected_exponent(k1, k2)
        assert e == HalfExp(-(k1 + k2 + 3))
        assert e == HalfExp(k_dot_beta(g, k1, k2) + 2 * (1 - g))
        assert lhs_leading(g, k1, k2)[0] == rhs_leading(g, k1, k2)[0] == e

    @pytest.mark.parametrize("e", [-2, 0, 1, 3])
    def test_mcmahon_exponent_irrelevant(self, e):
        assert rhs_leading(3, -2, -4, mcmahon_exponent=e) == rhs_leading(3, -2, -4)

    def test_wrong_k_beta_breaks_exponent(self):
        # shifting K.beta by one moves the rhs exponent by a half step
        rhs = rhs_series(2, -2, -3)
        assert rhs.shift(HalfExp(1)).valuation() != lhs_series(2, -2, -3).valuation()

    def test_lhs_truncation(self):
        s = lhs_series(2, -2, -2, trunc=HalfExp(7))
        assert s.trunc == HalfExp(7) and s.valuation() == HalfExp(1)

    def test_input_checks(self):
        for bad in [(0, -2, -2), (1, -1, -2), (1, -2, 0)]:
            with pytest.raises(ValueError):
                lhs_series(*bad)
            with pytest.raises(ValueError):
                rhs_series(*bad)


class TestCheck:
    def test_pass(self):
        rep = check(2, -2, -2, seed=1)
        assert rep.passed and rep.eval_ok
        assert rep.to_json() == {
            "g": 2,
            "k1": -2,
            "k2": -2,
            "exp": "1/2",
            "lhs": rep.lhs_coeff.render(),
            "rhs": rep.rhs_coeff.render(),
            "pass": True,
        }

    @pytest.mark.parametrize("g,k1,k2", SAMPLE)
    def test_swap(self, g, k1, k2):
        a, b = check(g, k1, k2), check(g, k2, k1)
        assert a.lhs_exp == b.lhs_exp
        assert a.lhs_coeff.swap12() == b.lhs_coeff and a.rhs_coeff.swap12() == b.rhs_coeff

    def test_failure_reported_not_raised(self):
        rep = CorrReport(1, -2, -2, HalfExp(1), HalfExp(3), RatFunc.const(1), RatFunc.const(1), False)
        assert rep.to_json()["pass"] is False
        assert "!=" in rep.to_json()["exp"]
        assert "FAIL" in rep.render()

    def test_grid_order(self):
        pts = list(grid(2, -3, -2))
        assert pts == sorted(pts) and len(pts) == 8

    def test_reports_json(self):
        data = json.loads(reports_json([check(1, -2, -3)]))
        assert data[0]["pass"] and data[0]["exp"] == "2/2"
