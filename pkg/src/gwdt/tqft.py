"""TQFT operators for the local theory of a P^2-bundle over a curve.

The section-class partition function is a trace of products of five 3x3
operators A, B, M1, M2, N whose entries are pure powers of ``phi`` times
rational functions of the equivariant parameters.  For the class
``beta_0 + r f``::

    Z = sum tr( (A^a, B^b) (M1^m1, N^n1) (M2^m2, N^n2) )

over nonnegative integers with ``a + b = g - 1``, ``m1 + n1 = -k1``,
``m2 + n2 = -k2`` and ``b + n1 + n2 = r``, where ``(U^a, V^b)`` is the sum of
all words in ``a`` copies of U and ``b`` copies of V.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import NamedTuple

from .algebra import RatFunc, t
from .series import PhiLaurent


class Op3:
    """3x3 matrix with PhiLaurent entries."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        self.rows = tuple(
            tuple(x if isinstance(x, PhiLaurent) else PhiLaurent.monomial(x) for x in row)
            for row in rows
        )
        if len(self.rows) != 3 or any(len(r) != 3 for r in self.rows):
            raise ValueError("Op3 needs a 3x3 array")

    @classmethod
    def identity(cls) -> "Op3":
        return cls([[1 if i == j else 0 for j in range(3)] for i in range(3)])

    @classmethod
    def zero(cls) -> "Op3":
        return cls([[0] * 3 for _ in range(3)])

    @classmethod
    def from_ratfuncs(cls, rows, phi_exp: int = 0) -> "Op3":
        """Matrix of rational functions times a common ``phi**phi_exp``."""
        return cls([[PhiLaurent.monomial(x, phi_exp) for x in row] for row in rows])

    def __getitem__(self, ij) -> PhiLaurent:
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Op3):
            return NotImplemented
        return self.rows == other.rows

    def __add__(self, other: "Op3") -> "Op3":
        return Op3([[self.rows[i][j] + other.rows[i][j] for j in range(3)] for i in range(3)])

    def __sub__(self, other: "Op3") -> "Op3":
        return Op3([[self.rows[i][j] - other.rows[i][j] for j in range(3)] for i in range(3)])

    def __matmul__(self, other: "Op3") -> "Op3":
        out = []
        for i in range(3):
            row = []
            for j in range(3):
                acc = PhiLaurent()
                for k in range(3):
                    x, y = self.rows[i][k], other.rows[k][j]
                    if x.terms and y.terms:
                        acc = acc + x * y
                row.append(acc)
            out.append(row)
        return Op3(out)

    def scale(self, c) -> "Op3":
        return Op3([[x.scale(c) for x in row] for row in self.rows])

    def __pow__(self, n: int) -> "Op3":
        if n < 0:
            raise ValueError("negative matrix power")
        result = Op3.identity()
        for _ in range(n):
            result = result @ self
        return result

    def trace(self) -> PhiLaurent:
        return self.rows[0][0] + self.rows[1][1] + self.rows[2][2]

    def map_coeffs(self, fn) -> "Op3":
        return Op3([[x.map_coeffs(fn) for x in row] for row in self.rows])

    def __repr__(self) -> str:
        return "Op3(" + "; ".join(", ".join(x.render() for x in row) for row in self.rows) + ")"


class Operators(NamedTuple):
    A: Op3
    B: Op3
    M1: Op3
    M2: Op3
    N: Op3

    @property
    def genus_adding(self) -> Op3:
        return self.A + self.B

    @property
    def level1_annihilation_inverse(self) -> Op3:
        return self.M1 + self.N

    @property
    def level2_annihilation_inverse(self) -> Op3:
        return self.M2 + self.N


def _euler(i: int) -> RatFunc:
    """Tangent weight product ``prod_{j != i} (t_i - t_j)`` at fixed point ``i``."""
    out = RatFunc.const(1)
    for j in range(3):
        if j != i:
            out = out * (t(i) - t(j))
    return out


def _inv_euler(i: int) -> RatFunc:
    out = RatFunc.const(1)
    for j in range(3):
        if j != i:
            c = [0, 0, 0]
            c[i], c[j] = 1, -1
            out = out * RatFunc.inv_linear(*c)
    return out


def build_operators(b22_as_printed: bool = False) -> Operators:
    """The operators A (phi^0), B (phi^3), M1, M2 (phi^-1) and N (phi^2).

    The printed lower-right entry of B reads ``2(2t2 + t0 - t1)``, which breaks
    the t1 <-> t2 symmetry shared by the other diagonal entries; by default the
    symmetric ``2(2t2 - t0 - t1)`` is used.  Pass ``b22_as_printed=True`` for the
    literal entry.
    """
    t0, t1, t2 = t(0), t(1), t(2)
    A = Op3.from_ratfuncs([[_euler(i) if i == j else 0 for j in range(3)] for i in range(3)])

    b22 = 2 * (2 * t2 + t0 - t1) if b22_as_printed else 2 * (2 * t2 - t0 - t1)
    bnum = [
        [2 * (2 * t0 - t1 - t2), t0 + t1 - 2 * t2, t0 + t2 - 2 * t1],
        [t0 + t1 - 2 * t2, 2 * (2 * t1 - t0 - t2), t1 + t2 - 2 * t0],
        [t0 + t2 - 2 * t1, t1 + t2 - 2 * t0, b22],
    ]
    B = Op3.from_ratfuncs(
        [[bnum[i][j] * _inv_euler(i) for j in range(3)] for i in range(3)], phi_exp=3
    )
    M1 = Op3.from_ratfuncs([[t0 - t1, 0, 0], [0, 0, 0], [0, 0, t2 - t1]], phi_exp=-1)
    M2 = Op3.from_ratfuncs([[t0 - t2, 0, 0], [0, t1 - t2, 0], [0, 0, 0]], phi_exp=-1)
    N = Op3.from_ratfuncs([[_inv_euler(i)] * 3 for i in range(3)], phi_exp=2)
    return Operators(A, B, M1, M2, N)


def interleave_table(U, V, amax: int, bmax: int, identity=None) -> list:
    """Table ``W[a][b] = (U^a, V^b)`` for ``a <= amax``, ``b <= bmax``.

    Uses ``W(a, b) = U W(a-1, b) + V W(a, b-1)``: a word either starts with U
    or with V.  Works for any matrix type supporting ``@`` and ``+``.
    """
    if identity is None:
        identity = Op3.identity()
    W = [[None] * (bmax + 1) for _ in range(amax + 1)]
    for a in range(amax + 1):
        for b in range(bmax + 1):
            if a == 0 and b == 0:
                W[a][b] = identity
            elif a == 0:
                W[a][b] = V @ W[a][b - 1]
            elif b == 0:
                W[a][b] = U @ W[a - 1][b]
            else:
                W[a][b] = U @ W[a - 1][b] + V @ W[a][b - 1]
    return W


def interleave_sum(U, V, a: int, b: int, identity=None):
    """Sum of all products containing ``a`` copies of U and ``b`` copies of V."""
    if a < 0 or b < 0:
        raise ValueError("interleave counts must be nonnegative")
    return interleave_table(U, V, a, b, identity)[a][b]


def interleave_brute(U, V, a: int, b: int, identity):
    """Reference: enumerate all C(a+b, a) words explicitly."""
    n = a + b
    total = None
    for v_slots in combinations(range(n), b):
        word = identity
        for pos in range(n):
            word = word @ (V if pos in v_slots else U)
        total = word if total is None else total + word
    return identity if total is None else total


@dataclass(frozen=True)
class GwInput:
    g: int
    k1: int
    k2: int
    r: int = 1

    def validate(self) -> None:
        if self.g < 1:
            raise ValueError(f"genus must be >= 1 (got g={self.g})")
        if self.k1 > 0 or self.k2 > 0:
            raise ValueError(f"need k1, k2 <= 0 (got k1={self.k1}, k2={self.k2})")
        if self.r < 0:
            raise ValueError(f"need r >= 0 (got r={self.r})")


def trace_tuples(g: int, k1: int, k2: int, r: int):
    """Admissible ``(a, b, m1, n1, m2, n2)``; only ``b`` and the ``n1/n2`` split are free."""
    for b in range(0, min(g - 1, r) + 1):
        a = g - 1 - b
        rest = r - b
        for n1 in range(0, min(rest, -k1) + 1):
            n2 = rest - n1
            if n2 > -k2:
                continue
            yield a, b, -k1 - n1, n1, -k2 - n2, n2


def z_trace(inp: GwInput, ops: Operators | None = None) -> PhiLaurent:
    """Partition function of class ``beta_0 + r f`` via the trace sum."""
    inp.validate()
    ops = ops or build_operators()
    g, k1, k2, r = inp.g, inp.k1, inp.k2, inp.r
    tuples = list(trace_tuples(g, k1, k2, r))
    if not tuples:
        return PhiLaurent()
    bmax = max(tp[1] for tp in tuples)
    n1max = max(tp[3] for tp in tuples)
    n2max = max(tp[5] for tp in tuples)
    W_ab = interleave_table(ops.A, ops.B, g - 1, bmax)
    W_1 = interleave_table(ops.M1, ops.N, -k1, n1max)
    W_2 = interleave_table(ops.M2, ops.N, -k2, n2max)
    total = PhiLaurent()
    for a, b, m1, n1, m2, n2 in tuples:
        total = total + (W_ab[a][b] @ W_1[m1][n1] @ W_2[m2][n2]).trace()
    return total


def _check_closed_range(inp: GwInput) -> None:
    if inp.k1 >= -1 or inp.k2 >= -1:
        raise ValueError(f"closed form needs k1, k2 < -1 (got k1={inp.k1}, k2={inp.k2})")
    if inp.r != 1:
        raise ValueError("closed form is for r = 1")
    if inp.g < 0:
        raise ValueError("genus must be >= 0")


def closed_form_poly(g: int, k1: int, k2: int) -> RatFunc:
    """``(t0-t1)^(g-k1-3) (t0-t2)^(g-k2-3) ((4g-4-k1-k2) t0 - (2g-2-k2) t1 - (2g-2-k1) t2)``."""
    t0, t1, t2 = t(0), t(1), t(2)
    lin = (4 * g - 4 - k1 - k2) * t0 - (2 * g - 2 - k2) * t1 - (2 * g - 2 - k1) * t2
    return (t0 - t1) ** (g - k1 - 3) * (t0 - t2) ** (g - k2 - 3) * lin


def z_closed_r1(inp: GwInput) -> PhiLaurent:
    _check_closed_range(inp)
    return PhiLaurent.monomial(closed_form_poly(inp.g, inp.k1, inp.k2), inp.k1 + inp.k2 + 3)


def z_proof_form(inp: GwInput, ops: Operators | None = None) -> PhiLaurent:
    """Three-term reduction of the r = 1 trace sum using cyclicity of the trace.

    ``(g-1) tr(A^(g-2) M1^-k1 M2^-k2 B) - k1 tr(A^(g-1) M1^(-k1-1) M2^-k2 N)
    - k2 tr(A^(g-1) M1^-k1 M2^(-k2-1) N)``; the first term is dropped at g = 1.
    """
    inp.validate()
    if inp.r != 1:
        raise ValueError("proof form is for r = 1")
    ops = ops or build_operators()
    g, k1, k2 = inp.g, inp.k1, inp.k2
    A, B, M1, M2, N = ops
    total = PhiLaurent()
    if g >= 2:
        total = total + (A ** (g - 2) @ M1 ** (-k1) @ M2 ** (-k2) @ B).trace().scale(g - 1)
    if k1 < 0:
        total = total + (A ** (g - 1) @ M1 ** (-k1 - 1) @ M2 ** (-k2) @ N).trace().scale(-k1)
    if k2 < 0:
        total = total + (A ** (g - 1) @ M1 ** (-k1) @ M2 ** (-k2 - 1) @ N).trace().scale(-k2)
    return total
