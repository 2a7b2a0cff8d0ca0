from fractions import Fraction
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gwdt.algebra import RatFunc, t
from gwdt.series import (
    HalfExp,
    PhiLaurent,
    QSeries,
    leading_term,
    mcmahon,
    phi_to_q,
    qseries_arith,
    qseries_pow,
)


def q(*coeffs, trunc=None, start=0):
    return QSeries.from_ints(list(coeffs), trunc=trunc, start=start)


def product_expansion(nterms: int, sign: int = 1) -> list:
    """prod_{n>=1} (1 - (sign q)^n)^(-n) on plain integer lists."""
    out = [1] + [0] * (nterms - 1)
    for n in range(1, nterms):
        for _ in range(n):
            # multiply by 1/(1 - s q^n) = sum_k s^k q^(nk)
            s = sign**n
            new = out[:]
            for e in range(n, nterms):
                new[e] += s * new[e - n]
            out = new
    return out


def plane_partitions(n: int) -> int:
    """Count plane partitions of n by stacking weakly decreasing rows."""

    def rows_under(bound, total):
        # weakly decreasing rows with entries <= bound[i] and sum == total
        def rec(i, prev, left):
            if left == 0:
                yield ()
                return
            if i == len(bound):
                return
            for v in range(min(prev, bound[i], left), 0, -1):
                for rest in rec(i + 1, v, left - v):
                    yield (v,) + rest

        yield from rec(0, total, total)

    def count(bound, left):
        if left == 0:
            return 1
        return sum(
            count(row + (0,) * (len(bound) - len(row)), left - sum(row))
            for s in range(1, left + 1)
            for row in rows_under(bound, s)
        )

    return count((n,) * n, n) if n else 1


class TestHalfExp:
    def test_order_and_arith(self):
        assert HalfExp(1) < HalfExp(2) and HalfExp(-3) < HalfExp(0)
        assert HalfExp(1) + HalfExp(1) == HalfExp(2)
        assert HalfExp.of(Fraction(3, 2)) == HalfExp(3)
        assert str(HalfExp(-5)) == "-5/2"
        with pytest.raises(ValueError):
            HalfExp.of(Fraction(1, 3))


class TestQSeries:
    def test_difference_of_squares(self):
        assert qseries_arith(q(1, 1, trunc=5), q(1, -1, trunc=5), "mul") == q(1, 0, -1, trunc=5)

    def test_half_exponents_add(self):
        half = QSeries.monomial(1, HalfExp(1), HalfExp(5))
        assert (half * half).items() == [(HalfExp(2), RatFunc.const(1))]

    def test_hand_multiplication(self):
        assert q(1, 1, 3, trunc=3) * q(1, 1, trunc=3) == q(1, 2, 4)

    def test_add_truncation_is_min(self):
        assert qseries_arith(q(1, 1, trunc=2), q(1, 1, 1, 1), "add").trunc == HalfExp(4)

    def test_mul_truncation_uses_valuation(self):
        # q * (1 + O(q^2)) is known to O(q^3)
        assert (q(0, 1, trunc=10) * q(1, trunc=2)).trunc == HalfExp(6)

    def test_no_coefficients_beyond_truncation(self):
        x = q(1, 1, 1, 1, 1, trunc=3)
        assert max(x.coeffs) < x.trunc.twice
        with pytest.raises(ValueError):
            x.coeff(HalfExp(6))

    def test_geometric_inverse(self):
        assert qseries_pow(q(1, 1, trunc=3), -1) == q(1, -1, 1)

    def test_zeroth_power(self):
        assert qseries_pow(q(2, 5, trunc=3), 0) == q(1, trunc=3)

    def test_binomial_inverse_square(self):
        # (1+q)^-2 = sum (-1)^n (n+1) q^n
        assert qseries_pow(q(1, 1, trunc=3), -2) == q(1, -2, 3)

    def test_non_invertible_leading_coefficient(self):
        x = QSeries({HalfExp(0): t(0) ** 2 + t(1) ** 2}, HalfExp(4))
        with pytest.raises(ValueError):
            qseries_pow(x, -1)

    def test_symbolic_coefficients(self):
        a = t(0) - t(1)
        x = QSeries({HalfExp(0): a, HalfExp(2): 1}, HalfExp(6))
        inv = qseries_pow(x, -1)
        assert (x * inv).agrees_with(QSeries.one(HalfExp(6)))

    @given(st.lists(st.integers(-4, 4), min_size=1, max_size=5), st.integers(1, 4))
    @settings(max_examples=40, deadline=None)
    def test_pow_inverse_pair(self, tail, n):
        x = q(1, *tail)
        prod = qseries_pow(x, n) * qseries_pow(x, -n)
        assert prod.agrees_with(QSeries.one(prod.trunc))


class TestMcMahon:
    def test_against_product_expansion(self):
        assert mcmahon(HalfExp(8)) == q(*product_expansion(4)) == q(1, 1, 3, 6)

    def test_plane_partition_counts(self):
        assert [plane_partitions(n) for n in range(5)] == product_expansion(5) == [1, 1, 3, 6, 13]

    def test_zeroth_power(self):
        assert mcmahon(HalfExp(8), 0) == q(1, 0, 0, 0)

    def test_negated(self):
        assert mcmahon(HalfExp(8), negate_q=True) == q(*product_expansion(4, sign=-1)) == q(1, -1, 3, -6)

    @given(st.integers(-3, 3), st.integers(-3, 3), st.booleans())
    @settings(max_examples=20, deadline=None)
    def test_exponents_add(self, e1, e2, neg):
        trunc = HalfExp(10)
        assert mcmahon(trunc, e1, neg) * mcmahon(trunc, e2, neg) == mcmahon(trunc, e1 + e2, neg)

    def test_leading_one(self):
        for e in range(-4, 5):
            assert leading_term(mcmahon(HalfExp(4), e)) == (HalfExp(0), RatFunc.const(1))


class TestPhiToQ:
    def test_phi_squared(self):
        # (2 sin(u/2))^2 = 2 - e^{iu} - e^{-iu} = q^-1 + 2 + q
        assert phi_to_q(PhiLaurent({2: 1}), HalfExp(6)) == q(1, 2, 1, trunc=3, start=-1)

    def test_constant(self):
        assert phi_to_q(PhiLaurent({0: 1}), HalfExp(6)) == q(1, trunc=3)

    def test_phi_inverse(self):
        x = phi_to_q(PhiLaurent({-1: 1}), HalfExp(5))
        assert x.items() == [(HalfExp(1), RatFunc.const(1)), (HalfExp(3), RatFunc.const(-1))]
        assert leading_term(x) == (HalfExp(1), RatFunc.const(1))

    @pytest.mark.parametrize("m", range(-6, 7))
    def test_even_powers_lead_with_one(self, m):
        x = phi_to_q(PhiLaurent({2 * m: 1}), HalfExp(-2 * m + 4))
        assert leading_term(x) == (HalfExp(-2 * m), RatFunc.const(1))

    @given(
        st.dictionaries(st.integers(-4, 4), st.integers(-3, 3), max_size=3),
        st.dictionaries(st.integers(-4, 4), st.integers(-3, 3), max_size=3),
    )
    @settings(max_examples=40, deadline=None)
    def test_multiplicative(self, a, b):
        x, y = PhiLaurent(a), PhiLaurent(b)
        trunc = HalfExp(6)
        lhs = phi_to_q(x * y, trunc)
        rhs = phi_to_q(x, trunc) * phi_to_q(y, trunc)
        assert lhs.agrees_with(rhs)

    def test_symbolic_coefficient(self):
        c = t(0) - t(2)
        assert phi_to_q(PhiLaurent({-1: c}), HalfExp(3)).items() == [(HalfExp(1), c)]


class TestLeadingTerm:
    def test_examples(self):
        x = QSeries({HalfExp(1): 3, HalfExp(2): 7}, HalfExp(6))
        assert leading_term(x) == (HalfExp(1), RatFunc.const(3))
        assert leading_term(q(1, 2, 1, trunc=3, start=-1)) == (HalfExp(-2), RatFunc.const(1))

    def test_empty_series(self):
        with pytest.raises(ValueError):
            leading_term(QSeries({}, HalfExp(4)))

    def test_rendering(self):
        assert q(1, -1, trunc=3).render() == "1 * q^(0/2) + -1 * q^(2/2) + O(q^(6/2))"
