"""Quick invariant checks run by ``gwdt selftest``.

A reduced version of the test suite that needs no test runner: one small
instance of every identity the package is built around.
"""

from __future__ import annotations

import random

from .algebra import DualP, LinForm, RatFunc, agree_at_points, dual_inverse, random_points, t
from .correspondence import check
from .localization import displayed_integrand, euler_moving, n_dt, n_dt_closed, obstruction_class, tangent_class
from .series import HalfExp, PhiLaurent, QSeries, mcmahon, phi_to_q
from .tqft import GwInput, build_operators, interleave_brute, interleave_sum, z_closed_r1, z_proof_form, z_trace


def _random_ratfunc(rng: random.Random) -> RatFunc:
    forms = [(1, -1, 0), (1, 0, -1), (0, 1, -1), (1, 1, -2)]
    x = RatFunc.const(rng.randint(-5, 5))
    for k in range(3):
        x = x + rng.randint(-3, 3) * t(k) ** rng.randint(0, 2)
    return x * RatFunc.inv_linear(*rng.choice(forms), power=rng.randint(0, 2))


def ring_axioms(seed: int) -> bool:
    rng = random.Random(seed)
    pts = random_points(5, seed, [LinForm(1, -1, 0), LinForm(1, 0, -1), LinForm(0, 1, -1), LinForm(1, 1, -2)])
    for _ in range(5):
        x, y, z = (_random_ratfunc(rng) for _ in range(3))
        if (x * y) * z != x * (y * z) or x * (y + z) != x * y + x * z or x + y != y + x:
            return False
        if not agree_at_points(x * y + z, y * x + z, pts):
            return False
    return True


def dual_inverse_check() -> bool:
    x = DualP(t(0) - t(2), 5)
    return x * dual_inverse(x) == DualP(1)


def interleave_check() -> bool:
    ops = build_operators()
    one = ops.A.identity()
    return interleave_sum(ops.M1, ops.N, 2, 2) == interleave_brute(ops.M1, ops.N, 2, 2, one)


def gw_check() -> bool:
    for g, k1, k2 in [(1, -2, -2), (2, -2, -3), (3, -3, -2)]:
        inp = GwInput(g, k1, k2, 1)
        z = z_trace(inp)
        if z != z_closed_r1(inp) or z != z_proof_form(inp):
            return False
    return z_trace(GwInput(1, 0, 0, 0)) == PhiLaurent({0: 3})


def dt_check() -> bool:
    for g, k1, k2 in [(1, -2, -2), (2, -2, -3), (3, -4, -2)]:
        if n_dt(g, k1, k2) != n_dt_closed(g, k1, k2):
            return False
        for comp in (1, 2):
            cls = obstruction_class(g, k1, k2, comp)
            if cls.fixed_part() != -tangent_class(g):
                return False
            if euler_moving(cls) != displayed_integrand(g, k1, k2, comp):
                return False
    return True


def series_check() -> bool:
    if mcmahon(HalfExp(10)) != QSeries.from_ints([1, 1, 3, 6, 13]):
        return False
    return phi_to_q(PhiLaurent({2: 1}), HalfExp(4)) == QSeries.from_ints([1, 2, 1], start=-1, trunc=2)


def correspondence_check(seed: int) -> bool:
    return all(check(g, k1, k2, seed=seed).passed for g, k1, k2 in [(1, -2, -2), (2, -2, -2), (2, -3, -4)])


def run_all(seed: int = 0) -> list[tuple[str, bool]]:
    return [
        ("ring axioms and evaluation homomorphism", ring_axioms(seed)),
        ("dual-number inverse", dual_inverse_check()),
        ("interleaved products vs word enumeration", interleave_check()),
        ("GW trace sum = closed form = proof form", gw_check()),
        ("DT localization = closed form, fixed part = -T_C", dt_check()),
        ("McMahon and phi -> q substitution", series_check()),
        ("leading-order GW/DT correspondence", correspondence_check(seed)),
    ]
