"""Exact arithmetic in cyclotomic fields Q(zeta_m).

Elements are coefficient vectors in the power basis ``1, z, ..., z^(phi(m)-1)``
reduced modulo the m-th cyclotomic polynomial, so equality and the zero
test are exact.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Sequence

Poly = list  # coefficient lists, lowest degree first


def _trim(p: Poly) -> Poly:
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_mul(a: Sequence, b: Sequence) -> Poly:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_divmod(a: Sequence, b: Sequence) -> tuple[Poly, Poly]:
    """Division by a nonzero polynomial; exact over Fraction, or over int when ``b`` is monic."""
    r = _trim(list(a))
    b = _trim(list(b))
    lead = b[-1]
    q = [0] * max(len(r) - len(b) + 1, 0)
    while len(r) >= len(b):
        c = r[-1] if lead == 1 else Fraction(r[-1]) / lead
        shift = len(r) - len(b)
        q[shift] = c
        for i, y in enumerate(b):
            r[shift + i] -= c * y
        _trim(r)
    return q, r


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_m, lowest degree first."""
    if m < 1:
        raise ValueError("cyclotomic index must be positive")
    num = [-1] + [0] * (m - 1) + [1]
    for k in range(1, m):
        if m % k == 0:
            num, rem = _poly_divmod(num, cyclotomic_polynomial(k))
            assert not rem
    return tuple(num)


class CyclotomicNumber:
    __slots__ = ("m", "coeffs")

    def __init__(self, m: int, coeffs: Sequence = ()):
        phi = len(cyclotomic_polynomial(m)) - 1
        c = [Fraction(x) for x in coeffs]
        if len(c) > phi:
            _, c = _poly_divmod(c, cyclotomic_polynomial(m))
        c = list(c) + [Fraction(0)] * (phi - len(c))
        self.m = m
        self.coeffs = tuple(c)

    @classmethod
    def rational(cls, m: int, value) -> "CyclotomicNumber":
        return cls(m, [value])

    @classmethod
    def zeta(cls, m: int, e: int = 1) -> "CyclotomicNumber":
        """``zeta_m ** e``"""
        e %= m
        return cls(m, [0] * e + [1])

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def _coerce(self, other) -> "CyclotomicNumber":
        if isinstance(other, CyclotomicNumber):
            if other.m != self.m:
                raise ValueError(f"field mismatch: Q(zeta_{self.m}) vs Q(zeta_{other.m})")
            return other
        return CyclotomicNumber.rational(self.m, other)

    def __add__(self, other):
        o = self._coerce(other)
        return CyclotomicNumber(self.m, [a + b for a, b in zip(self.coeffs, o.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicNumber(self.m, [-a for a in self.coeffs])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, CyclotomicNumber):
            return CyclotomicNumber(self.m, [a * other for a in self.coeffs])
        o = self._coerce(other)
        return CyclotomicNumber(self.m, _poly_mul(self.coeffs, o.coeffs))

    __rmul__ = __mul__

    def inverse(self) -> "CyclotomicNumber":
        """Inverse via the extended Euclidean algorithm against Phi_m."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        # invariant: r_i = s_i * self (mod Phi_m)
        r0 = [Fraction(x) for x in cyclotomic_polynomial(self.m)]
        r1 = _trim(list(self.coeffs))
        s0, s1 = [], [Fraction(1)]
        while len(r1) > 1:
            q, r = _poly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
        c = r1[0]
        return CyclotomicNumber(self.m, [x / c for x in s1])

    def __truediv__(self, other):
        if not isinstance(other, CyclotomicNumber):
            return CyclotomicNumber(self.m, [a / Fraction(other) for a in self.coeffs])
        return self * self._coerce(other).inverse()

    def embed(self, M: int) -> "CyclotomicNumber":
        """Image in Q(zeta_M) for a multiple ``M`` of ``m``, via zeta_m = zeta_M^(M/m)."""
        if M % self.m:
            raise ValueError(f"{self.m} does not divide {M}")
        step = M // self.m
        c = [Fraction(0)] * ((len(self.coeffs) - 1) * step + 1)
        for i, a in enumerate(self.coeffs):
            c[i * step] = a
        return CyclotomicNumber(M, c)

    def as_rational(self) -> Fraction | None:
        if any(self.coeffs[1:]):
            return None
        return self.coeffs[0]

    def __eq__(self, other):
        if isinstance(other, CyclotomicNumber):
            return self.m == other.m and self.coeffs == other.coeffs
        try:
            return self == self._coerce(other)
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self):
        return hash((self.m, self.coeffs))

    def __repr__(self):
        return f"CyclotomicNumber({self.m}, {[str(c) for c in self.coeffs]})"

    def __str__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                z = f"z{self.m}" + (f"^{i}" if i > 1 else "")
                terms.append(z if c == 1 else f"-{z}" if c == -1 else f"{c}*{z}")
        return " + ".join(terms).replace("+ -", "- ") or "0"


def _poly_sub(a: Sequence, b: Sequence) -> Poly:
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return _trim([x - y for x, y in zip(a, b)])


def rank_over_field(rows: list[list[CyclotomicNumber]]) -> int:
    """Row rank of a matrix with entries in one cyclotomic field."""
    M = [list(r) for r in rows]
    rank = 0
    ncols = len(M[0]) if M else 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(M)) if M[i][col]), None)
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        inv = M[rank][col].inverse()
        M[rank] = [v * inv for v in M[rank]]
        for i in range(rank + 1, len(M)):
            if M[i][col]:
                f = M[i][col]
                M[i] = [a - f * b for a, b in zip(M[i], M[rank])]
        rank += 1
    return rank
