from collections import Counter

import pytest

from conftest import GRID
from gwdt.algebra import DualP, RatFunc, ratfunc_eq, t
from gwdt.localization import (
    DIVISORS,
    BundleCxC,
    BundleCxX,
    InconsistencyError,
    KClassC,
    KGenC,
    displayed_integrand,
    divisor_bundle,
    dt_report,
    euler_moving,
    fixed_part_ok,
    integrate_C,
    n_dt,
    n_dt_closed,
    obstruction_class,
    pushforward,
    pushforward_p1,
    pushforward_pi,
    tangent_class,
)

t0, t1, t2 = t(0), t(1), t(2)
SAMPLE = GRID[::5]


class TestDivisors:
    def test_d1(self):
        assert divisor_bundle("D1", 1) == BundleCxX(1, (1, 0), (0, 0), 0)

    def test_d2(self):
        assert divisor_bundle("D2", 1) == BundleCxX(1, (0, 1), (0, 0), 1)

    def test_difference(self):
        assert divisor_bundle("D1minusD2", 1) == BundleCxX(0, (0, 0), (1, -1), -1)

    def test_component_two_swaps(self):
        assert divisor_bundle("D1", 2) == BundleCxX(1, (0, 1), (0, 0), 0)
        assert divisor_bundle("D1minusD2", 2) == BundleCxX(0, (0, 0), (-1, 1), -1)

    def test_unknown(self):
        with pytest.raises(ValueError):
            divisor_bundle("D3")
        with pytest.raises(ValueError):
            divisor_bundle("D1", 3)
        with pytest.raises(ValueError):
            BundleCxX(2)


class TestPushforward:
    @pytest.mark.parametrize("name", ["minusD1", "minusD2"])
    def test_negative_hyperplane_vanishes(self, name):
        for comp in (1, 2):
            assert pushforward_pi(divisor_bundle(name, comp)) == Counter()
            assert pushforward(divisor_bundle(name, comp), 2, -2, -3) == KClassC()

    def test_trivial(self):
        assert pushforward_pi(divisor_bundle("triv")) == Counter({BundleCxC((0, 0, 0), 0): 1})

    def test_d1_three_summands(self):
        out = pushforward_pi(divisor_bundle("D1", 1))
        assert out == Counter(
            {BundleCxC((-1, 1, 0), 0): 1, BundleCxC((0, 0, 0), 0): 1, BundleCxC((0, 1, -1), 0): 1}
        )

    @pytest.mark.parametrize("g,k1,k2", [(1, -2, -3), (3, -4, -2)])
    def test_diagonal_twist_up(self, g, k1, k2):
        got = pushforward_p1(BundleCxC((0, -1, 1), 1), g, k1, k2)
        w = (0, -1, 1)
        assert got == KClassC({KGenC(0, w): 1 - g - k1 + k2, KGenC(-k1 + k2 + 2 - 2 * g, w): 1})

    @pytest.mark.parametrize("g,k1,k2", [(1, -2, -3), (3, -4, -2)])
    def test_diagonal_twist_down(self, g, k1, k2):
        got = pushforward_p1(BundleCxC((0, 1, -1), -1), g, k1, k2)
        w = (0, 1, -1)
        assert got == KClassC({KGenC(0, w): 1 - g + k1 - k2, KGenC(k1 - k2, w): -1})

    def test_trivial_rank(self):
        for g in range(4):
            assert pushforward_p1(BundleCxC((0, 0, 0)), g, -2, -2) == KClassC({KGenC(0, (0, 0, 0)): 1 - g})


class TestObstructionClass:
    def test_fixed_part_example(self):
        cls = obstruction_class(2, -2, -2, 1)
        assert cls.fixed_part() == KClassC({KGenC(-2, (0, 0, 0)): -1})

    @pytest.mark.parametrize("g,k1,k2", SAMPLE)
    def test_fixed_part_is_minus_tangent(self, g, k1, k2):
        for comp in (1, 2):
            assert obstruction_class(g, k1, k2, comp).fixed_part() == -tangent_class(g)
        assert fixed_part_ok(g, k1, k2)

    @pytest.mark.parametrize("g,k1,k2", SAMPLE)
    def test_component_swap(self, g, k1, k2):
        assert obstruction_class(g, k1, k2, 2) == obstruction_class(g, k2, k1, 1).swap12()

    def test_kclass_arith(self):
        a = KClassC({KGenC(1, (1, 0, 0)): 2})
        b = KClassC({KGenC(1, (1, 0, 0)): -2, KGenC(0, (0, 0, 0)): 1})
        assert a + b == KClassC({KGenC(0, (0, 0, 0)): 1})
        assert (a - a).mult == {}
        assert 3 * a == KClassC({KGenC(1, (1, 0, 0)): 6})

    def test_negative_genus(self):
        with pytest.raises(ValueError):
            obstruction_class(-1, -2, -2)


class TestEuler:
    def test_single_generator(self):
        gen = KGenC(4, (1, -1, 0))
        # L0 L1^* has character -(t0 - t1)
        assert euler_moving(KClassC({gen: 1})) == DualP(t1 - t0, 4)

    def test_inverse_generator(self):
        gen = KGenC(4, (1, -1, 0))
        w = t1 - t0
        assert euler_moving(KClassC({gen: -1})) == DualP(1 / w, -4 / w**2)

    def test_fixed_generators_skipped(self):
        assert euler_moving(KClassC({KGenC(3, (0, 0, 0)): 5})) == DualP(1)

    def test_integrate(self):
        assert integrate_C(DualP(t0, t1)) == t1
        assert integrate_C(DualP(1)) == RatFunc.const(0)

    @pytest.mark.parametrize("g,k1,k2", SAMPLE)
    @pytest.mark.parametrize("comp", [1, 2])
    def test_displayed_integrand(self, g, k1, k2, comp):
        got = euler_moving(obstruction_class(g, k1, k2, comp))
        want = displayed_integrand(g, k1, k2, comp)
        assert ratfunc_eq(got.a, want.a) and ratfunc_eq(got.b, want.b)

    def test_displayed_sum_is_closed_form(self):
        total = integrate_C(displayed_integrand(2, -2, -2, 1)) + integrate_C(displayed_integrand(2, -2, -2, 2))
        assert ratfunc_eq(total, n_dt_closed(2, -2, -2))


class TestNdt:
    def test_g2(self):
        assert n_dt(2, -2, -2) == (t0 - t1) * (t0 - t2) * (8 * t0 - 4 * t1 - 4 * t2)

    def test_g3(self):
        assert n_dt(3, -2, -3) == (t0 - t1) ** 2 * (t0 - t2) ** 3 * (13 * t0 - 7 * t1 - 6 * t2)

    def test_g1_deep(self):
        assert n_dt(1, -4, -4) == (t0 - t1) ** 2 * (t0 - t2) ** 2 * (8 * t0 - 4 * t1 - 4 * t2)

    @pytest.mark.parametrize("g,k1,k2", SAMPLE)
    def test_closed_form(self, g, k1, k2):
        assert n_dt(g, k1, k2) == n_dt_closed(g, k1, k2)

    @pytest.mark.parametrize("g,k1,k2", SAMPLE)
    def test_swap(self, g, k1, k2):
        assert n_dt(g, k1, k2).swap12() == n_dt(g, k2, k1)

    def test_polynomial_when_exponents_nonnegative(self):
        for g, k1, k2 in [(0, -3, -3), (1, -2, -3), (3, -2, -2)]:
            assert g - k1 - 3 >= 0 and g - k2 - 3 >= 0
            assert not n_dt(g, k1, k2).den

    def test_genus_zero_corner(self):
        assert n_dt(0, -2, -4) == n_dt_closed(0, -2, -4) == 2 * (t0 - t2)

    def test_opposite_character_sign(self):
        # the sign only matters through the parity of the number of moving factors
        assert n_dt(2, -2, -3, sign=1) == n_dt_closed(2, -2, -3)
        assert n_dt(2, -2, -2, sign=1) == -n_dt_closed(2, -2, -2)

    @pytest.mark.parametrize("bad", [(2, -1, -2), (2, -2, 0), (-1, -2, -2)])
    def test_range(self, bad):
        with pytest.raises(ValueError):
            n_dt(*bad)

    def test_report(self):
        rep = dt_report(2, -2, -2)
        assert rep == {
            "g": 2,
            "k1": -2,
            "k2": -2,
            "n_dt": n_dt(2, -2, -2).render(),
            "fixed_part_ok": True,
        }


def test_all_divisors_known():
    for name in DIVISORS:
        divisor_bundle(name)


def test_inconsistency_is_runtime_error():
    assert issubclass(InconsistencyError, RuntimeError)
