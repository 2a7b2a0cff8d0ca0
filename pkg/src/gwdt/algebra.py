"""Exact arithmetic in the equivariant coefficient ring.

Everything downstream lives in the ring

    Q(i)[t0, t1, t2][ 1/L : L an integer linear form in t0, t1, t2 ]

so a rational function is stored as a sparse Gaussian-rational polynomial over
a product of normalized linear forms.  Restricting denominators to linear
forms means no multivariate gcd is ever needed: cancellation is trial division
by the (few) forms that occur in the denominator.

The module also provides ``DualP``, the ring ``R[p]/(p^2)`` used to integrate
Euler classes over a curve, where ``p`` is the class of a point.
"""

from __future__ import annotations

import random
import re
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Mapping, Sequence, Union

Rat = Fraction

VARS = ("t0", "t1", "t2")

_EXP_LIMIT = 2**31


class GaussRat:
    """A Gaussian rational ``re + im*i`` with exact ``Fraction`` parts."""

    __slots__ = ("re", "im")

    def __init__(self, re: Union[int, Fraction] = 0, im: Union[int, Fraction] = 0):
        # Fraction(Fraction) re-validates; skip it on the hot path
        self.re = re if type(re) is Fraction else Fraction(re)
        self.im = im if type(im) is Fraction else Fraction(im)

    @classmethod
    def coerce(cls, x) -> "GaussRat":
        """Lift an int or Fraction; raise for anything else."""
        if isinstance(x, GaussRat):
            return x
        if isinstance(x, (int, Fraction)):
            return cls(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to GaussRat")

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return not self.im and self.re == other
        if not isinstance(other, GaussRat):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self) -> int:
        return hash((self.re, self.im))

    def __neg__(self) -> "GaussRat":
        return GaussRat(-self.re, -self.im)

    def __add__(self, other) -> "GaussRat":
        if not isinstance(other, _SCALARS):
            return NotImplemented
        other = GaussRat.coerce(other)
        return GaussRat(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other) -> "GaussRat":
        if not isinstance(other, _SCALARS):
            return NotImplemented
        other = GaussRat.coerce(other)
        return GaussRat(self.re - other.re, self.im - other.im)

    def __rsub__(self, other) -> "GaussRat":
        return GaussRat.coerce(other) - self

    def __mul__(self, other) -> "GaussRat":
        if not isinstance(other, _SCALARS):
            return NotImplemented
        other = GaussRat.coerce(other)
        if not self.im and not other.im:
            return GaussRat(self.re * other.re)
        return GaussRat(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def conjugate(self) -> "GaussRat":
        return GaussRat(self.re, -self.im)

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def inverse(self) -> "GaussRat":
        if not self:
            raise ZeroDivisionError("GaussRat division by zero")
        n = self.norm()
        return GaussRat(self.re / n, -self.im / n)

    def __truediv__(self, other) -> "GaussRat":
        if not isinstance(other, _SCALARS):
            return NotImplemented
        other = GaussRat.coerce(other)
        if not other.im:
            if not other.re:
                raise ZeroDivisionError("GaussRat division by zero")
            return GaussRat(self.re / other.re, self.im / other.re)
        return self * other.inverse()

    def __rtruediv__(self, other) -> "GaussRat":
        return GaussRat.coerce(other) / self

    def __pow__(self, n: int) -> "GaussRat":
        if n < 0:
            return self.inverse() ** (-n)
        result, base = GaussRat(1), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __repr__(self) -> str:
        return f"GaussRat({self})"

    def __str__(self) -> str:
        if not self.im:
            return str(self.re)
        sign = "-" if self.im < 0 else "+"
        return f"{self.re}{sign}{abs(self.im)}i"


I = GaussRat(0, 1)

_SCALARS = (int, Fraction, GaussRat)

Exp = tuple  # (e0, e1, e2)


def _check_exp(e: Exp) -> Exp:
    for x in e:
        if x < 0 or x >= _EXP_LIMIT:
            raise OverflowError(f"exponent {e} outside supported range")
    return e


class MultiPoly:
    """Sparse polynomial in t0, t1, t2 with Gaussian-rational coefficients.

    ``terms`` maps exponent triples to nonzero coefficients.  Instances are
    treated as immutable; every operation returns a new polynomial.
    """

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping[Exp, object] = ()):
        clean = {}
        for e, c in dict(terms).items():
            c = GaussRat.coerce(c)
            if c:
                clean[_check_exp(tuple(e))] = c
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "MultiPoly":
        # terms already clean
        p = cls.__new__(cls)
        p.terms = terms
        p._hash = None
        return p

    @classmethod
    def const(cls, c) -> "MultiPoly":
        return cls({(0, 0, 0): c})

    @classmethod
    def var(cls, k: int) -> "MultiPoly":
        e = [0, 0, 0]
        e[k] = 1
        return cls({tuple(e): 1})

    @classmethod
    def linear(cls, coeffs: Sequence[int]) -> "MultiPoly":
        return cls({_unit(k): c for k, c in enumerate(coeffs) if c})

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and (0, 0, 0) in self.terms)

    def constant_term(self) -> GaussRat:
        return self.terms.get((0, 0, 0), GaussRat(0))

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, GaussRat)):
            other = MultiPoly.const(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __neg__(self) -> "MultiPoly":
        return MultiPoly._raw({e: -c for e, c in self.terms.items()})

    def __add__(self, other) -> "MultiPoly":
        if not isinstance(other, (MultiPoly,) + _SCALARS):
            return NotImplemented
        other = _as_poly(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e)
            if s is None:
                out[e] = c
            else:
                s = s + c
                if s:
                    out[e] = s
                else:
                    del out[e]
        return MultiPoly._raw(out)

    __radd__ = __add__

    def __sub__(self, other) -> "MultiPoly":
        if not isinstance(other, (MultiPoly,) + _SCALARS):
            return NotImplemented
        return self + (-_as_poly(other))

    def __rsub__(self, other) -> "MultiPoly":
        return _as_poly(other) - self

    def __mul__(self, other) -> "MultiPoly":
        if not isinstance(other, (MultiPoly,) + _SCALARS):
            return NotImplemented
        other = _as_poly(other)
        if len(other.terms) == 1 and (0, 0, 0) in other.terms:
            return self.scale(other.terms[(0, 0, 0)])
        out: dict = {}
        for (a0, a1, a2), c in self.terms.items():
            for (b0, b1, b2), d in other.terms.items():
                e = (a0 + b0, a1 + b1, a2 + b2)
                s = out.get(e)
                out[e] = c * d if s is None else s + c * d
        for e in [e for e, c in out.items() if not c]:
            del out[e]
        if out:
            _check_exp(max(out, key=max))
        return MultiPoly._raw(out)

    __rmul__ = __mul__

    def scale(self, c) -> "MultiPoly":
        c = GaussRat.coerce(c)
        if not c:
            return MultiPoly._raw({})
        return MultiPoly._raw({e: v * c for e, v in self.terms.items()})

    def __pow__(self, n: int) -> "MultiPoly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result, base = MultiPoly.const(1), self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def evaluate(self, point: Sequence) -> GaussRat:
        total = GaussRat(0)
        pts = [GaussRat.coerce(x) for x in point]
        for (e0, e1, e2), c in self.terms.items():
            total = total + c * pts[0] ** e0 * pts[1] ** e1 * pts[2] ** e2
        return total

    def substitute_swap(self, perm: Sequence[int]) -> "MultiPoly":
        """Permute the variables: t_k in the result is t_perm[k] in ``self``."""
        out = {}
        for e, c in self.terms.items():
            out[tuple(e[perm[k]] for k in range(3))] = c
        return MultiPoly._raw(out)

    def div_linform(self, form: "LinForm") -> "MultiPoly | None":
        """Exact quotient ``self / form``, or ``None`` if ``form`` does not divide."""
        coeffs = form.coeffs
        v = next(k for k in range(3) if coeffs[k])
        lead = coeffs[v]
        others = [(k, coeffs[k]) for k in range(3) if k != v and coeffs[k]]
        buckets: dict = {}
        for e, c in self.terms.items():
            buckets.setdefault(e[v], {})[e] = c
        quot = {}
        for d in range(max(buckets, default=0), 0, -1):
            lower = buckets.setdefault(d - 1, {})
            for e, c in buckets.get(d, {}).items():
                if not c:
                    continue
                qc = c / lead
                qe = list(e)
                qe[v] -= 1
                qe = tuple(qe)
                quot[qe] = qc
                for k, ck in others:
                    te = list(qe)
                    te[k] += 1
                    te = tuple(te)
                    lower[te] = lower.get(te, GaussRat(0)) - qc * ck
        if any(buckets.get(0, {}).values()):
            return None
        return MultiPoly._raw({e: c for e, c in quot.items() if c})

    def render(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            mono = "*".join(
                VARS[k] if e[k] == 1 else f"{VARS[k]}^{e[k]}" for k in range(3) if e[k]
            )
            if not c.im:
                sign = "-" if c.re < 0 else "+"
                mag = abs(c.re)
                body = mono if (mag == 1 and mono) else (f"{mag}*{mono}" if mono else str(mag))
            else:
                sign = "+"
                body = f"({c})*{mono}" if mono else f"({c})"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"MultiPoly({self.render()!r})"


def _unit(k: int) -> Exp:
    e = [0, 0, 0]
    e[k] = 1
    return tuple(e)


def _as_poly(x) -> MultiPoly:
    if isinstance(x, MultiPoly):
        return x
    return MultiPoly.const(x)


class LinForm:
    """Normalized integer linear form ``i*t0 + j*t1 + l*t2``.

    The coefficients are coprime and the first nonzero one is positive.  Use
    :meth:`normalize` to split an arbitrary integer triple into a scalar and a
    normalized form.
    """

    __slots__ = ("coeffs",)

    def __init__(self, i: int, j: int, l: int):
        c = (int(i), int(j), int(l))
        if c == (0, 0, 0):
            raise ValueError("zero linear form")
        first = next(x for x in c if x)
        if first < 0 or gcd(*c) != 1:
            raise ValueError(f"linear form {c} is not normalized")
        self.coeffs = c

    @staticmethod
    def normalize(i: int, j: int, l: int) -> tuple[int, "LinForm"]:
        """Return ``(s, f)`` with ``s * f == i*t0 + j*t1 + l*t2``."""
        c = (int(i), int(j), int(l))
        if c == (0, 0, 0):
            raise ValueError("zero linear form")
        s = gcd(*c)
        if next(x for x in c if x) < 0:
            s = -s
        return s, LinForm(*(x // s for x in c))

    def __eq__(self, other) -> bool:
        return isinstance(other, LinForm) and self.coeffs == other.coeffs

    def __lt__(self, other: "LinForm") -> bool:
        return self.coeffs > other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def poly(self) -> MultiPoly:
        return _linform_pow(self.coeffs, 1)

    def pow(self, n: int) -> MultiPoly:
        return _linform_pow(self.coeffs, n)

    def evaluate(self, point: Sequence) -> GaussRat:
        return sum((GaussRat.coerce(x) * c for x, c in zip(point, self.coeffs)), GaussRat(0))

    def swap12(self) -> tuple[int, "LinForm"]:
        i, j, l = self.coeffs
        return LinForm.normalize(i, l, j)

    def render(self) -> str:
        i, j, l = self.coeffs
        return f"{i}*t0{j:+d}*t1{l:+d}*t2"

    def __repr__(self) -> str:
        return f"LinForm({self.render()})"


@lru_cache(maxsize=4096)
def _linform_pow(coeffs: tuple, n: int) -> MultiPoly:
    if n == 0:
        return MultiPoly.const(1)
    if n == 1:
        return MultiPoly.linear(coeffs)
    half = _linform_pow(coeffs, n // 2)
    sq = half * half
    return sq * MultiPoly.linear(coeffs) if n % 2 else sq


Scalar = Union[int, Fraction, GaussRat]


class RatFunc:
    """Rational function ``num / prod(form^e)`` with linear-form denominators.

    Construction always reduces: no denominator form divides the numerator.
    Reduced representations are canonical, so structural comparison after
    reduction decides equality; :func:`ratfunc_eq` does it by cross
    multiplication as well.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: Union[MultiPoly, Scalar] = 0, den: Mapping[LinForm, int] | Iterable = ()):
        num = _as_poly(num)
        dd: dict = {}
        for f, e in dict(den).items():
            if e < 0:
                num = num * f.pow(-e)
            elif e:
                dd[f] = dd.get(f, 0) + e
        self.num, self.den = _reduce(num, dd)
        self._hash = None

    @classmethod
    def _raw(cls, num: MultiPoly, den: tuple) -> "RatFunc":
        r = cls.__new__(cls)
        r.num, r.den, r._hash = num, den, None
        return r

    @classmethod
    def const(cls, c: Scalar) -> "RatFunc":
        return cls._raw(MultiPoly.const(c), ())

    @classmethod
    def var(cls, k: int) -> "RatFunc":
        return cls._raw(MultiPoly.var(k), ())

    @classmethod
    def linear(cls, i: int, j: int, l: int) -> "RatFunc":
        """The (unnormalized) linear polynomial ``i*t0 + j*t1 + l*t2``."""
        return cls._raw(MultiPoly.linear((i, j, l)), ())

    @classmethod
    def inv_linear(cls, i: int, j: int, l: int, power: int = 1) -> "RatFunc":
        """``(i*t0 + j*t1 + l*t2)^(-power)``."""
        s, f = LinForm.normalize(i, j, l)
        return cls._raw(MultiPoly.const(GaussRat(Fraction(1, s**power))), ((f, power),))

    @property
    def den_dict(self) -> dict:
        return dict(self.den)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return not self.den

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, GaussRat, MultiPoly)):
            other = _as_ratfunc(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __neg__(self) -> "RatFunc":
        return RatFunc._raw(-self.num, self.den)

    def __add__(self, other) -> "RatFunc":
        other = _as_ratfunc(other)
        if not other.num.terms:
            return self
        if not self.num.terms:
            return other
        if self.den == other.den:
            num, den = _reduce(self.num + other.num, dict(self.den))
            return RatFunc._raw(num, den)
        d1, d2 = dict(self.den), dict(other.den)
        lcm = dict(d1)
        for f, e in d2.items():
            if e > lcm.get(f, 0):
                lcm[f] = e
        n1 = self.num
        for f, e in lcm.items():
            if e > d1.get(f, 0):
                n1 = n1 * f.pow(e - d1.get(f, 0))
        n2 = other.num
        for f, e in lcm.items():
            if e > d2.get(f, 0):
                n2 = n2 * f.pow(e - d2.get(f, 0))
        num, den = _reduce(n1 + n2, lcm)
        return RatFunc._raw(num, den)

    __radd__ = __add__

    def __sub__(self, other) -> "RatFunc":
        return self + (-_as_ratfunc(other))

    def __rsub__(self, other) -> "RatFunc":
        return _as_ratfunc(other) - self

    def __mul__(self, other) -> "RatFunc":
        other = _as_ratfunc(other)
        if not self.num.terms or not other.num.terms:
            return RatFunc._raw(MultiPoly._raw({}), ())
        if not other.den and other.num.is_constant():
            return RatFunc._raw(self.num.scale(other.num.constant_term()), self.den)
        if not self.den and self.num.is_constant():
            return RatFunc._raw(other.num.scale(self.num.constant_term()), other.den)
        den = dict(self.den)
        for f, e in other.den:
            den[f] = den.get(f, 0) + e
        num, den = _reduce(self.num * other.num, den)
        return RatFunc._raw(num, den)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        """Multiplicative inverse.

        The numerator must be a constant times a product of linear forms, each
        either with coefficients in [-3, 3] or the single leftover factor.
        """
        if self.is_zero():
            raise ZeroDivisionError("RatFunc division by zero")
        num = MultiPoly.const(1)
        for f, e in self.den:
            num = num * f.pow(e)
        rest = self.num
        den: dict = {}
        for f in _SMALL_FORMS:
            while rest.total_degree() > 0:
                q = rest.div_linform(f)
                if q is None:
                    break
                rest = q
                den[f] = den.get(f, 0) + 1
        if rest.total_degree() == 1 and rest.is_homogeneous():
            c, f = _as_scaled_linform(rest)
            den[f] = den.get(f, 0) + 1
            rest = MultiPoly.const(c)
        if not rest.is_constant():
            raise ValueError(f"{self.num.render()} is not invertible with linear-form denominators")
        return RatFunc(num.scale(rest.constant_term().inverse()), den)

    def __truediv__(self, other) -> "RatFunc":
        return self * _as_ratfunc(other).inverse()

    def __rtruediv__(self, other) -> "RatFunc":
        return _as_ratfunc(other) * self.inverse()

    def __pow__(self, n: int) -> "RatFunc":
        if n < 0:
            return self.inverse() ** (-n)
        if not self.den:
            return RatFunc._raw(self.num ** n, ())
        return RatFunc._raw(self.num ** n, tuple((f, e * n) for f, e in self.den)) if n else RatFunc.const(1)

    def evaluate(self, point: Sequence) -> GaussRat:
        d = GaussRat(1)
        for f, e in self.den:
            v = f.evaluate(point)
            if not v:
                raise ZeroDivisionError(f"denominator {f.render()} vanishes at {tuple(point)}")
            d = d * v**e
        return self.num.evaluate(point) / d

    def swap12(self) -> "RatFunc":
        """Exchange t1 and t2."""
        num = self.num.substitute_swap((0, 2, 1))
        den = {}
        for f, e in self.den:
            s, g = f.swap12()
            num = num.scale(GaussRat(Fraction(1, s**e)))
            den[g] = den.get(g, 0) + e
        return RatFunc(num, den)

    def total_degree(self) -> int | None:
        """Degree of a homogeneous function (numerator minus denominator), else None."""
        if self.is_zero() or not self.num.is_homogeneous():
            return None
        return self.num.total_degree() - sum(e for _, e in self.den)

    def render(self) -> str:
        if not self.den:
            return self.num.render()
        den = "*".join(f"({f.render()})^{e}" for f, e in self.den)
        return f"({self.num.render()}) / ({den})"

    def pretty(self) -> str:
        """Human-oriented display with the root-difference factors pulled out."""
        num = self.num
        factors = []
        for coeffs, label in _PRETTY_FORMS:
            f = LinForm(*coeffs)
            n = 0
            while not num.is_constant():
                q = num.div_linform(f)
                if q is None:
                    break
                num, n = q, n + 1
            if n:
                factors.append(f"({label})" + (f"^{n}" if n > 1 else ""))
        head = num.render().replace("*", "").replace(" ", "")
        if num.is_constant():
            if num == 1 and factors:
                head = ""
            elif num == -1 and factors:
                head = "-"
        else:
            head = f"({head})"
        if head not in ("", "-") and factors and num.is_constant():
            head += "*"
        out = head + "".join(factors) if num.is_constant() else "".join(factors) + head
        if self.den:
            den = "".join(
                f"({_pretty_form(f)})" + (f"^{e}" if e > 1 else "") for f, e in self.den
            )
            out = f"{out or '1'}/{den}"
        return out or "1"

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"RatFunc({self.render()!r})"


_PRETTY_FORMS = [((1, -1, 0), "t0-t1"), ((1, 0, -1), "t0-t2"), ((0, 1, -1), "t1-t2")]


def _as_scaled_linform(p: MultiPoly) -> tuple[GaussRat, LinForm]:
    """Write a homogeneous linear polynomial as ``c * f`` with ``f`` normalized."""
    lin = [p.terms.get(_unit(k), GaussRat(0)) for k in range(3)]
    scalar = next(c for c in lin if c)
    ratios = [c / scalar for c in lin]
    if any(r.im for r in ratios):
        raise ValueError(f"{p.render()} is not a multiple of a rational linear form")
    den_l = 1
    for r in ratios:
        den_l = den_l * r.re.denominator // gcd(den_l, r.re.denominator)
    s, f = LinForm.normalize(*(int(r.re * den_l) for r in ratios))
    return scalar * Fraction(s, den_l), f


def _small_forms(bound: int) -> list:
    out = set()
    rng = range(-bound, bound + 1)
    for c in ((i, j, l) for i in rng for j in rng for l in rng):
        if any(c):
            out.add(LinForm.normalize(*c)[1])
    return sorted(out, key=lambda f: (sum(map(abs, f.coeffs)), f.coeffs))


_SMALL_FORMS = _small_forms(3)


def _pretty_form(f: LinForm) -> str:
    return MultiPoly.linear(f.coeffs).render().replace("*", "").replace(" ", "")


def _sort_den(den: dict) -> tuple:
    return tuple(sorted(((f, e) for f, e in den.items() if e), key=lambda fe: fe[0].coeffs, reverse=True))


def _reduce(num: MultiPoly, den: dict) -> tuple[MultiPoly, tuple]:
    if not num.terms:
        return num, ()
    if not den:
        return num, ()
    out = {}
    for f, e in den.items():
        while e and not num.is_constant():
            q = num.div_linform(f)
            if q is None:
                break
            num, e = q, e - 1
        if e:
            out[f] = e
    return num, _sort_den(out)


def _as_ratfunc(x) -> RatFunc:
    if isinstance(x, RatFunc):
        return x
    if isinstance(x, MultiPoly):
        return RatFunc._raw(x, ())
    return RatFunc.const(x)


def poly_arith(x: MultiPoly, y: MultiPoly, op: str) -> MultiPoly:
    ops = {"add": MultiPoly.__add__, "sub": MultiPoly.__sub__, "mul": MultiPoly.__mul__}
    return ops[op](x, y)


def poly_div_linform(p: MultiPoly, f: LinForm) -> MultiPoly | None:
    return p.div_linform(f)


def ratfunc_arith(x: RatFunc, y: RatFunc, op: str) -> RatFunc:
    ops = {
        "add": RatFunc.__add__,
        "sub": RatFunc.__sub__,
        "mul": RatFunc.__mul__,
        "div": RatFunc.__truediv__,
    }
    return ops[op](x, y)


def ratfunc_eq(x: RatFunc, y: RatFunc) -> bool:
    """Decide ``x == y`` identically by cross multiplication."""
    x, y = _as_ratfunc(x), _as_ratfunc(y)
    dx, dy = dict(x.den), dict(y.den)
    lhs, rhs = x.num, y.num
    for f, e in dy.items():
        lhs = lhs * f.pow(e)
    for f, e in dx.items():
        rhs = rhs * f.pow(e)
    return (lhs - rhs).is_zero()


def t(k: int) -> RatFunc:
    """The equivariant parameter ``t_k`` as a rational function."""
    return RatFunc.var(k)


def random_point(rng: random.Random, avoid: Iterable[LinForm] = (), bound: int = 97) -> tuple:
    """Random rational point with pairwise-distinct coordinates.

    ``avoid`` lists linear forms that must not vanish at the point.
    """
    avoid = list(avoid)
    while True:
        pt = tuple(Fraction(rng.randint(-bound, bound), rng.randint(1, bound)) for _ in range(3))
        if len(set(pt)) < 3 or 0 in pt:
            continue
        if all(f.evaluate(pt) for f in avoid):
            return pt


def random_points(n: int, seed: int, avoid: Iterable[LinForm] = ()) -> list:
    rng = random.Random(seed)
    avoid = list(avoid)
    return [random_point(rng, avoid) for _ in range(n)]


def agree_at_points(x: RatFunc, y: RatFunc, points: Iterable[Sequence]) -> bool:
    """Evaluation oracle: compare values at each point, skipping poles."""
    for pt in points:
        try:
            vx, vy = x.evaluate(pt), y.evaluate(pt)
        except ZeroDivisionError:
            continue
        if vx != vy:
            return False
    return True


class DualP:
    """Element ``a + b*[p]`` of ``R[p]/(p^2)``."""

    __slots__ = ("a", "b")

    def __init__(self, a=0, b=0):
        self.a = _as_ratfunc(a)
        self.b = _as_ratfunc(b)

    def __eq__(self, other) -> bool:
        if not isinstance(other, DualP):
            other = DualP(other)
        return ratfunc_eq(self.a, other.a) and ratfunc_eq(self.b, other.b)

    def __hash__(self) -> int:
        return hash((self.a, self.b))

    def __add__(self, other) -> "DualP":
        other = other if isinstance(other, DualP) else DualP(other)
        return DualP(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __neg__(self) -> "DualP":
        return DualP(-self.a, -self.b)

    def __sub__(self, other) -> "DualP":
        other = other if isinstance(other, DualP) else DualP(other)
        return self + (-other)

    def __mul__(self, other) -> "DualP":
        other = other if isinstance(other, DualP) else DualP(other)
        return DualP(self.a * other.a, self.a * other.b + self.b * other.a)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "DualP":
        other = other if isinstance(other, DualP) else DualP(other)
        return self * dual_inverse(other)

    def __pow__(self, n: int) -> "DualP":
        if n < 0:
            return dual_inverse(self) ** (-n)
        if n == 0:
            return DualP(1)
        # (a + b p)^n = a^n + n a^(n-1) b p
        return DualP(self.a**n, self.a ** (n - 1) * self.b * n)

    def __repr__(self) -> str:
        return f"DualP({self.a.render()!r}, {self.b.render()!r})"


def dual_inverse(x: DualP) -> DualP:
    if x.a.is_zero():
        raise ZeroDivisionError("dual number with zero constant part is not invertible")
    ainv = x.a.inverse()
    return DualP(ainv, -(ainv * ainv * x.b))


_TERM_RE = re.compile(r"\s*([+-])?\s*(\([^()]*\)|[0-9/]+)?\*?((?:t[012](?:\^\d+)?\*?)*)\s*")
_COEF_RE = re.compile(r"\(\s*(-?[0-9/]+)([+-][0-9/]+)i\s*\)")
_FORM_RE = re.compile(r"\((-?\d+)\*t0([+-]\d+)\*t1([+-]\d+)\*t2\)\^(\d+)")


def parse_poly(s: str) -> MultiPoly:
    """Inverse of :meth:`MultiPoly.render`."""
    s = s.strip()
    if s == "0":
        return MultiPoly()
    terms: dict = {}
    pos = 0
    while pos < len(s):
        m = _TERM_RE.match(s, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse polynomial at {s[pos:]!r}")
        sign, coef, mono = m.groups()
        pos = m.end()
        if coef is None:
            c = GaussRat(1)
        elif coef.startswith("("):
            cm = _COEF_RE.fullmatch(coef)
            if not cm:
                raise ValueError(f"bad coefficient {coef!r}")
            c = GaussRat(Fraction(cm.group(1)), Fraction(cm.group(2)))
        else:
            c = GaussRat(Fraction(coef))
        if sign == "-":
            c = -c
        e = [0, 0, 0]
        for v in filter(None, mono.split("*")):
            name, _, power = v.partition("^")
            e[int(name[1])] += int(power or 1)
        e = tuple(e)
        terms[e] = terms.get(e, GaussRat(0)) + c
    return MultiPoly(terms)


def parse_ratfunc(s: str) -> RatFunc:
    """Inverse of :meth:`RatFunc.render`."""
    s = s.strip()
    if " / " not in s:
        return RatFunc(parse_poly(s))
    num_s, den_s = s.rsplit(" / ", 1)
    if not (num_s.startswith("(") and num_s.endswith(")")):
        raise ValueError(f"bad rational function {s!r}")
    num = parse_poly(num_s[1:-1])
    den = {}
    for i, j, l, e in _FORM_RE.findall(den_s):
        sc, f = LinForm.normalize(int(i), int(j), int(l))
        if sc != 1:
            raise ValueError(f"denominator form ({i},{j},{l}) is not normalized")
        den[f] = den.get(f, 0) + int(e)
    return RatFunc(num, den)
