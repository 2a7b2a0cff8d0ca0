"""Torus localization for the leading Donaldson-Thomas invariant of class beta_0 + f.

The fixed locus is two copies of the base curve C.  On each copy the universal
subscheme is cut out by two divisors, so the Koszul resolution turns the
deformation/obstruction class into a signed sum of pushforwards of line
bundles on ``C x X``.  Those are pushed down in two stages::

    C x X --(id x pi)--> C x C --p1--> C

using the projection formula for the first map and Riemann-Roch (plus the
diagonal sequence) for the second.  The result is a formal integer
combination of equivariant line bundles on C, each with a degree and a torus
weight; its Euler class lives in ``R[p]/(p^2)`` and integrating over C picks
out the coefficient of the point class ``[p]``.

Weights follow the convention that ``L0`` (and likewise ``L1``, ``L2``) carry
weight ``-t0`` (``-t1``, ``-t2``), so the bundle ``L0^i L1^j L2^l`` has
character ``-(i t0 + j t1 + l t2)``.  Generators are indexed by their exponent
triple ``(i, j, l)``; :data:`CHARACTER_SIGN` converts that to the character.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Mapping

from .algebra import DualP, RatFunc, dual_inverse, t
from .tqft import closed_form_poly

# character of L0^i L1^j L2^l is CHARACTER_SIGN * (i t0 + j t1 + l t2)
CHARACTER_SIGN = -1

DIVISORS = ("D1", "D2", "minusD1", "minusD2", "D1minusD2", "D2minusD1", "triv")

# signs of the Koszul expansion of R pr_1* (Hom(I, I) - O)
KOSZUL_TERMS = (
    ("D1", -1),
    ("D2", -1),
    ("minusD1", -1),
    ("minusD2", -1),
    ("D1minusD2", 1),
    ("triv", 2),
    ("D2minusD1", 1),
)


class InconsistencyError(RuntimeError):
    """An internal identity of the localization computation failed."""


@dataclass(frozen=True)
class BundleCxX:
    """``pr2^*(pi^*(L1^j L2^l) (x) O_X(h)) (x) (id x pi)^*(p2^*(L1^j' L2^l') (x) O(delta * Diag))``."""

    h: int
    pi_twist: tuple = (0, 0)
    base_twist: tuple = (0, 0)
    delta: int = 0

    def __post_init__(self):
        if self.h not in (-1, 0, 1) or self.delta not in (-1, 0, 1):
            raise ValueError(f"unsupported bundle {self}")


@dataclass(frozen=True)
class BundleCxC:
    """``p2^*(L0^i L1^j L2^l) (x) O(delta * Diag)`` on ``C x C``."""

    exps: tuple
    delta: int = 0


@dataclass(frozen=True)
class KGenC:
    """Equivariant line bundle on C: degree and exponent triple ``(i, j, l)``."""

    degree: int
    weight: tuple

    @property
    def is_fixed(self) -> bool:
        return self.weight == (0, 0, 0)

    def euler(self, sign: int = CHARACTER_SIGN) -> DualP:
        i, j, l = self.weight
        return DualP(RatFunc.linear(sign * i, sign * j, sign * l), self.degree)


class KClassC:
    """Formal integer combination of :class:`KGenC`."""

    __slots__ = ("mult",)

    def __init__(self, mult: Mapping[KGenC, int] = ()):
        self.mult = {k: m for k, m in dict(mult).items() if m}

    def __add__(self, other: "KClassC") -> "KClassC":
        c = Counter(self.mult)
        c.update(other.mult)
        return KClassC(c)

    def __neg__(self) -> "KClassC":
        return KClassC({k: -m for k, m in self.mult.items()})

    def __sub__(self, other: "KClassC") -> "KClassC":
        return self + (-other)

    def __rmul__(self, n: int) -> "KClassC":
        return KClassC({k: n * m for k, m in self.mult.items()})

    def __eq__(self, other) -> bool:
        return isinstance(other, KClassC) and self.mult == other.mult

    def fixed_part(self) -> "KClassC":
        return KClassC({k: m for k, m in self.mult.items() if k.is_fixed})

    def moving_part(self) -> "KClassC":
        return KClassC({k: m for k, m in self.mult.items() if not k.is_fixed})

    def swap12(self) -> "KClassC":
        return KClassC({KGenC(k.degree, (k.weight[0], k.weight[2], k.weight[1])): m for k, m in self.mult.items()})

    def __repr__(self) -> str:
        items = sorted(self.mult.items(), key=lambda km: (km[0].weight, km[0].degree))
        return "KClassC(" + ", ".join(f"{m:+d}[deg {k.degree}, wt {k.weight}]" for k, m in items) + ")"


def _swap(pair: tuple) -> tuple:
    return (pair[1], pair[0])


def divisor_bundle(name: str, component: int = 1) -> BundleCxX:
    """Line bundle ``O(D)`` on ``C x X`` for the divisors of a fixed-locus component.

    Component 1 is cut out by ``D1 = pr2^* H1`` and ``D2 = pr2^* H2 + Diag``;
    component 2 exchanges the roles of (L1, k1, t1) and (L2, k2, t2).
    """
    table = {
        "D1": BundleCxX(1, (1, 0), (0, 0), 0),
        "D2": BundleCxX(1, (0, 1), (0, 0), 1),
        "minusD1": BundleCxX(-1, (-1, 0), (0, 0), 0),
        "minusD2": BundleCxX(-1, (0, -1), (0, 0), -1),
        "D1minusD2": BundleCxX(0, (0, 0), (1, -1), -1),
        "D2minusD1": BundleCxX(0, (0, 0), (-1, 1), 1),
        "triv": BundleCxX(0),
    }
    if name not in table:
        raise ValueError(f"unknown divisor {name!r}")
    if component not in (1, 2):
        raise ValueError("component must be 1 or 2")
    x = table[name]
    if component == 2:
        x = BundleCxX(x.h, _swap(x.pi_twist), _swap(x.base_twist), x.delta)
    return x


def pushforward_pi(x: BundleCxX) -> Counter:
    """``R(id x pi)_*``: O_X(1) pushes to ``L0* + L1* + L2*``, O_X(-1) to zero."""
    j = x.pi_twist[0] + x.base_twist[0]
    l = x.pi_twist[1] + x.base_twist[1]
    out: Counter = Counter()
    if x.h == 1:
        for dual in ((-1, 0, 0), (0, -1, 0), (0, 0, -1)):
            out[BundleCxC((dual[0], j + dual[1], l + dual[2]), x.delta)] += 1
    elif x.h == 0:
        out[BundleCxC((0, j, l), x.delta)] += 1
    return out


def pushforward_p1(x: BundleCxC, g: int, k1: int, k2: int) -> KClassC:
    """``R p1_*`` by Riemann-Roch; a diagonal twist adds or removes one bundle."""
    i, j, l = x.exps
    deg = j * k1 + l * k2
    out = Counter({KGenC(0, x.exps): 1 - g + deg})
    if x.delta == -1:
        out[KGenC(deg, x.exps)] -= 1
    elif x.delta == 1:
        out[KGenC(deg + 2 - 2 * g, x.exps)] += 1
    elif x.delta != 0:
        raise ValueError(f"unsupported diagonal twist {x.delta}")
    return KClassC(out)


def pushforward(x: BundleCxX, g: int, k1: int, k2: int) -> KClassC:
    total = KClassC()
    for y, m in pushforward_pi(x).items():
        total = total + m * pushforward_p1(y, g, k1, k2)
    return total


def tangent_class(g: int) -> KClassC:
    return KClassC({KGenC(2 - 2 * g, (0, 0, 0)): 1})


def obstruction_class(g: int, k1: int, k2: int, component: int = 1) -> KClassC:
    """K-class of ``R pr_1* (Hom(I, I) - O)`` on one component of the fixed locus.

    Raises :class:`InconsistencyError` unless the fixed part is exactly ``-T_C``.
    """
    if g < 0:
        raise ValueError("genus must be >= 0")
    total = KClassC()
    for name, sign in KOSZUL_TERMS:
        total = total + sign * pushforward(divisor_bundle(name, component), g, k1, k2)
    if total.fixed_part() != -tangent_class(g):
        raise InconsistencyError(f"fixed part {total.fixed_part()} is not -T_C at g={g}, k=({k1},{k2})")
    return total


def fixed_part_ok(g: int, k1: int, k2: int) -> bool:
    try:
        for comp in (1, 2):
            obstruction_class(g, k1, k2, comp)
    except InconsistencyError:
        return False
    return True


def euler_moving(x: KClassC, sign: int = CHARACTER_SIGN) -> DualP:
    """``prod (weight + degree [p])^mult`` over the moving generators."""
    out = DualP(1)
    for gen, m in sorted(x.mult.items(), key=lambda km: (km[0].weight, km[0].degree)):
        if gen.is_fixed:
            continue
        e = gen.euler(sign)
        if e.a.is_zero():
            raise InconsistencyError(f"moving generator {gen} has zero weight")
        out = out * (e ** m if m > 0 else dual_inverse(e) ** (-m))
    return out


def integrate_C(x: DualP) -> RatFunc:
    """Integral over C: the coefficient of the point class."""
    return x.b


def displayed_integrand(g: int, k1: int, k2: int, component: int = 1) -> DualP:
    """The closed-form moving Euler class of each component, written out by hand."""
    t0, t1, t2 = t(0), t(1), t(2)
    num = DualP((t0 - t1) ** (-k1 + g - 1) * (t0 - t2) ** (-k2 + g - 1))
    if component == 1:
        f1, f2 = DualP(t0 - t2, k2 + 2 - 2 * g), DualP(t2 - t1, k1 - k2)
    else:
        f1, f2 = DualP(t0 - t1, k1 + 2 - 2 * g), DualP(t1 - t2, k2 - k1)
    return num * dual_inverse(f1) * dual_inverse(f2)


def _check_dt_range(g: int, k1: int, k2: int) -> None:
    if k1 >= -1 or k2 >= -1:
        raise ValueError(f"need k1, k2 < -1 (got k1={k1}, k2={k2})")
    if g < 0:
        raise ValueError("genus must be >= 0")


def n_dt(g: int, k1: int, k2: int, sign: int = CHARACTER_SIGN) -> RatFunc:
    """Leading DT invariant: sum over both fixed components of the integrated Euler class."""
    _check_dt_range(g, k1, k2)
    total = RatFunc.const(0)
    for comp in (1, 2):
        total = total + integrate_C(euler_moving(obstruction_class(g, k1, k2, comp), sign))
    return total


def n_dt_closed(g: int, k1: int, k2: int) -> RatFunc:
    _check_dt_range(g, k1, k2)
    return closed_form_poly(g, k1, k2)


def dt_report(g: int, k1: int, k2: int) -> dict:
    return {
        "g": g,
        "k1": k1,
        "k2": k2,
        "n_dt": n_dt(g, k1, k2).render(),
        "fixed_part_ok": fixed_part_ok(g, k1, k2),
    }
