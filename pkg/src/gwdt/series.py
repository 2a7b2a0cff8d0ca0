"""Laurent polynomials in phi and truncated q-series with half-integer exponents.

Gromov-Witten values are Laurent polynomials in ``phi = 2 sin(u/2)``.  The
change of variable ``e^{iu} = -q`` with the branch ``e^{iu/2} = i q^{1/2}``
sends ``phi`` to ``q^{-1/2} (1 + q)``, which is what :func:`phi_to_q` applies.

q-series carry their truncation order explicitly: coefficients at exponents
at or beyond the order are unknown, never implicitly zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .algebra import GaussRat, RatFunc, _as_ratfunc


@dataclass(frozen=True, order=True)
class HalfExp:
    """Exponent ``twice / 2``."""

    twice: int

    @classmethod
    def of(cls, value) -> "HalfExp":
        v = Fraction(value) * 2
        if v.denominator != 1:
            raise ValueError(f"{value} is not a half-integer")
        return cls(int(v))

    @property
    def value(self) -> Fraction:
        return Fraction(self.twice, 2)

    def __add__(self, other: "HalfExp") -> "HalfExp":
        return HalfExp(self.twice + other.twice)

    def __sub__(self, other: "HalfExp") -> "HalfExp":
        return HalfExp(self.twice - other.twice)

    def __neg__(self) -> "HalfExp":
        return HalfExp(-self.twice)

    def __str__(self) -> str:
        return f"{self.twice}/2"


class PhiLaurent:
    """Finite Laurent polynomial ``sum_k c_k phi^k`` with RatFunc coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[int, object] = ()):
        clean = {}
        for k, c in dict(terms).items():
            c = _as_ratfunc(c)
            if not c.is_zero():
                clean[int(k)] = c
        self.terms = clean

    @classmethod
    def _raw(cls, terms: dict) -> "PhiLaurent":
        x = cls.__new__(cls)
        x.terms = terms
        return x

    @classmethod
    def monomial(cls, c, k: int = 0) -> "PhiLaurent":
        return cls({k: c})

    def is_zero(self) -> bool:
        return not self.terms

    def degrees(self) -> set:
        return set(self.terms)

    def coeff(self, k: int) -> RatFunc:
        return self.terms.get(k, RatFunc.const(0))

    def __eq__(self, other) -> bool:
        if not isinstance(other, PhiLaurent):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __neg__(self) -> "PhiLaurent":
        return PhiLaurent._raw({k: -c for k, c in self.terms.items()})

    def __add__(self, other: "PhiLaurent") -> "PhiLaurent":
        if not other.terms:
            return self
        if not self.terms:
            return other
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out[k] + c if k in out else c
            if s.is_zero():
                out.pop(k, None)
            else:
                out[k] = s
        return PhiLaurent._raw(out)

    def __sub__(self, other: "PhiLaurent") -> "PhiLaurent":
        return self + (-other)

    def __mul__(self, other) -> "PhiLaurent":
        if not isinstance(other, PhiLaurent):
            return self.scale(other)
        if not self.terms or not other.terms:
            return PhiLaurent._raw({})
        out: dict = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                k = k1 + k2
                out[k] = out[k] + c1 * c2 if k in out else c1 * c2
        return PhiLaurent._raw({k: c for k, c in out.items() if not c.is_zero()})

    def __rmul__(self, other) -> "PhiLaurent":
        return self.scale(other)

    def scale(self, c) -> "PhiLaurent":
        c = _as_ratfunc(c)
        return PhiLaurent._raw({k: v * c for k, v in self.terms.items() if not (v * c).is_zero()})

    def map_coeffs(self, fn) -> "PhiLaurent":
        return PhiLaurent({k: fn(c) for k, c in self.terms.items()})

    def render(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(
            (f"({c.render()})" if len(c.num.terms) > 1 or c.den else c.render()) + f" * phi^{k}"
            for k, c in sorted(self.terms.items())
        )

    def to_json(self) -> dict:
        return {
            "phi_terms": [
                {"phi_exp": k, "coeff": c.render()} for k, c in sorted(self.terms.items())
            ]
        }

    @classmethod
    def from_json(cls, obj: dict) -> "PhiLaurent":
        from .algebra import parse_ratfunc

        return cls({t["phi_exp"]: parse_ratfunc(t["coeff"]) for t in obj["phi_terms"]})

    def __repr__(self) -> str:
        return f"PhiLaurent({self.render()!r})"


class QSeries:
    """Truncated series ``sum c_e q^e + O(q^trunc)`` with half-integer ``e``.

    ``coeffs`` is keyed by twice the exponent; ``trunc`` is a :class:`HalfExp`.
    """

    __slots__ = ("coeffs", "trunc")

    def __init__(self, coeffs: Mapping[HalfExp, object], trunc: HalfExp):
        self.trunc = trunc
        clean = {}
        for e, c in dict(coeffs).items():
            e = e.twice if isinstance(e, HalfExp) else int(e)
            c = _as_ratfunc(c)
            if e < trunc.twice and not c.is_zero():
                clean[e] = clean[e] + c if e in clean else c
        self.coeffs = {e: c for e, c in clean.items() if not c.is_zero()}

    @classmethod
    def monomial(cls, c, exp: HalfExp, trunc: HalfExp) -> "QSeries":
        return cls({exp: c}, trunc)

    @classmethod
    def one(cls, trunc: HalfExp) -> "QSeries":
        return cls({HalfExp(0): 1}, trunc)

    @classmethod
    def from_ints(cls, coeffs: list, trunc: int | None = None, start: int = 0) -> "QSeries":
        """Series ``sum coeffs[n] q^(start + n)`` with integer steps."""
        if trunc is None:
            trunc = start + len(coeffs)
        return cls({HalfExp(2 * (start + n)): c for n, c in enumerate(coeffs)}, HalfExp(2 * trunc))

    def valuation(self) -> HalfExp:
        """Lowest exponent that may be nonzero (``trunc`` if all known terms vanish)."""
        if not self.coeffs:
            return self.trunc
        return HalfExp(min(self.coeffs))

    def coeff(self, e: HalfExp) -> RatFunc:
        if e.twice >= self.trunc.twice:
            raise ValueError(f"coefficient of q^({e}) is beyond truncation O(q^({self.trunc}))")
        return self.coeffs.get(e.twice, RatFunc.const(0))

    def items(self):
        return [(HalfExp(e), c) for e, c in sorted(self.coeffs.items())]

    def truncate(self, trunc: HalfExp) -> "QSeries":
        return QSeries({HalfExp(e): c for e, c in self.coeffs.items()}, min(trunc, self.trunc))

    def __eq__(self, other) -> bool:
        if not isinstance(other, QSeries):
            return NotImplemented
        return self.trunc == other.trunc and self.coeffs == other.coeffs

    def agrees_with(self, other: "QSeries") -> bool:
        """Equality up to the smaller of the two truncation orders."""
        t = min(self.trunc, other.trunc)
        return self.truncate(t) == other.truncate(t)

    def __neg__(self) -> "QSeries":
        return QSeries({HalfExp(e): -c for e, c in self.coeffs.items()}, self.trunc)

    def __add__(self, other: "QSeries") -> "QSeries":
        trunc = min(self.trunc, other.trunc)
        out = {HalfExp(e): c for e, c in self.coeffs.items()}
        for e, c in other.coeffs.items():
            h = HalfExp(e)
            out[h] = out[h] + c if h in out else c
        return QSeries(out, trunc)

    def __sub__(self, other: "QSeries") -> "QSeries":
        return self + (-other)

    def __mul__(self, other) -> "QSeries":
        if not isinstance(other, QSeries):
            c = _as_ratfunc(other)
            return QSeries({HalfExp(e): v * c for e, v in self.coeffs.items()}, self.trunc)
        trunc = min(self.trunc + other.valuation(), other.trunc + self.valuation())
        out: dict = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                if e < trunc.twice:
                    out[e] = out[e] + c1 * c2 if e in out else c1 * c2
        return QSeries({HalfExp(e): c for e, c in out.items()}, trunc)

    def __rmul__(self, other) -> "QSeries":
        return self * other

    def shift(self, e: HalfExp) -> "QSeries":
        """Multiply by ``q^e``."""
        return QSeries({HalfExp(k + e.twice): c for k, c in self.coeffs.items()}, self.trunc + e)

    def __pow__(self, n: int) -> "QSeries":
        return qseries_pow(self, n)

    def render(self) -> str:
        parts = []
        for e, c in sorted(self.coeffs.items()):
            cs = c.render()
            if len(c.num.terms) > 1 or c.den:
                cs = f"({cs})"
            parts.append(f"{cs} * q^({e}/2)")
        parts.append(f"O(q^({self.trunc}))")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"QSeries({self.render()!r})"


def qseries_arith(x: QSeries, y: QSeries, op: str) -> QSeries:
    if op == "add":
        return x + y
    if op == "mul":
        return x * y
    raise ValueError(f"unknown op {op!r}")


def qseries_pow(x: QSeries, n: int) -> QSeries:
    """``x**n``; negative ``n`` inverts via a geometric series in the unit part."""
    if n == 0:
        return QSeries.one(x.trunc - x.valuation())
    if n < 0:
        return qseries_pow(_inverse(x), -n)
    result, base = None, x
    while n:
        if n & 1:
            result = base if result is None else result * base
        n >>= 1
        if n:
            base = base * base
    return result


def _inverse(x: QSeries) -> QSeries:
    if not x.coeffs:
        raise ZeroDivisionError("series is zero to its truncation order")
    v = x.valuation()
    lead = x.coeffs[v.twice]
    lead_inv = lead.inverse()  # raises if not invertible in RatFunc
    # x = lead q^v (1 - w), w has strictly positive exponents
    rel = x.trunc - v
    w = QSeries({HalfExp(e - v.twice): -(c * lead_inv) for e, c in x.coeffs.items() if e != v.twice}, rel)
    total = QSeries.one(rel)
    power = QSeries.one(rel)
    while power.coeffs:
        power = (power * w).truncate(rel)
        total = total + power
    return (total * lead_inv).shift(-v)


def mcmahon(trunc: HalfExp, exponent: int = 1, negate_q: bool = False) -> QSeries:
    """``M(q)^exponent`` (or ``M(-q)^exponent``) with ``M(q) = prod (1 - q^n)^(-n)``."""
    if trunc.twice < 0:
        raise ValueError("truncation order must be nonnegative")
    nmax = trunc.twice // 2 + (trunc.twice % 2)
    result = QSeries.one(trunc)
    for n in range(1, nmax + 1):
        sign = (-1) ** n if negate_q else 1
        factor = QSeries({HalfExp(0): 1, HalfExp(2 * n): -sign}, trunc)
        result = result * qseries_pow(factor, -n * exponent)
    return result.truncate(trunc)


def one_plus_q_power(k: int, trunc: HalfExp) -> QSeries:
    """``(1 + q)^k`` truncated, by the binomial series."""
    coeffs = {}
    c = Fraction(1)
    n = 0
    while 2 * n < trunc.twice:
        coeffs[HalfExp(2 * n)] = c
        if k >= 0 and n >= k:
            break
        c = c * (k - n) / (n + 1)
        n += 1
    return QSeries(coeffs, trunc)


def phi_to_q(x: PhiLaurent, trunc: HalfExp) -> QSeries:
    """Substitute ``phi -> q^(-1/2) (1 + q)`` (branch ``e^{iu/2} = i q^{1/2}``)."""
    total = QSeries({}, trunc)
    for k, c in x.terms.items():
        shift = HalfExp(-k)
        inner = trunc - shift
        if inner.twice <= 0:
            continue
        total = total + (one_plus_q_power(k, inner) * c).shift(shift)
    return total


def leading_term(x: QSeries) -> tuple[HalfExp, RatFunc]:
    if not x.coeffs:
        raise ValueError(f"series vanishes up to O(q^({x.trunc})); no leading term")
    e = min(x.coeffs)
    return HalfExp(e), x.coeffs[e]


def i_power(n: int) -> GaussRat:
    """``i**n`` for any integer ``n``."""
    return [GaussRat(1), GaussRat(0, 1), GaussRat(-1), GaussRat(0, -1)][n % 4]
