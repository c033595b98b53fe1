"""Exact integer and rational linear algebra.

Matrices are plain lists of row lists holding Python ints (or
``Fraction`` where noted). Every routine copies its input; nothing is
mutated in place from the caller's point of view.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import prod
from typing import Sequence

Matrix = list[list[int]]


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def transpose(A: Sequence[Sequence]) -> list[list]:
    return [list(col) for col in zip(*A)]


def matmul(A: Sequence[Sequence], B: Sequence[Sequence]) -> list[list]:
    Bt = transpose(B)
    return [[sum(a * b for a, b in zip(row, col)) for col in Bt] for row in A]


def matvec(A: Sequence[Sequence], x: Sequence) -> list:
    return [sum(a * b for a, b in zip(row, x)) for row in A]


def vecmat(x: Sequence, A: Sequence[Sequence]) -> list:
    """Row vector times matrix."""
    out = [0] * (len(A[0]) if A else 0)
    for xi, row in zip(x, A):
        if xi:
            for j, a in enumerate(row):
                out[j] += xi * a
    return out


def _copy(A: Sequence[Sequence[int]]) -> Matrix:
    return [list(map(int, row)) for row in A]


def _ncols(A: Sequence[Sequence]) -> int:
    return len(A[0]) if A else 0


def _row_addmul(M: Matrix, dst: int, src: int, c: int) -> None:
    """row[dst] += c * row[src]"""
    rd, rs = M[dst], M[src]
    for j, v in enumerate(rs):
        if v:
            rd[j] += c * v


def _col_addmul(M: Matrix, dst: int, src: int, c: int) -> None:
    for row in M:
        if row[src]:
            row[dst] += c * row[src]


def hermite_form(A: Sequence[Sequence[int]]) -> tuple[Matrix, Matrix]:
    """Row-style Hermite normal form.

    Returns ``(H, U)`` with ``U`` unimodular and ``U @ A == H``. Pivots of
    ``H`` are positive, entries above a pivot lie in ``[0, pivot)`` and
    zero rows sit at the bottom.
    """
    H = _copy(A)
    m, ncols = len(H), _ncols(H)
    U = identity(m)
    row = 0
    for col in range(ncols):
        if row == m:
            break
        found = False
        while True:
            nz = [i for i in range(row, m) if H[i][col] != 0]
            if not nz:
                break
            found = True
            piv = min(nz, key=lambda i: abs(H[i][col]))
            if piv != row:
                H[row], H[piv] = H[piv], H[row]
                U[row], U[piv] = U[piv], U[row]
            p = H[row][col]
            clean = True
            for i in range(row + 1, m):
                if H[i][col]:
                    q = H[i][col] // p
                    _row_addmul(H, i, row, -q)
                    _row_addmul(U, i, row, -q)
                    if H[i][col]:
                        clean = False
            if clean:
                break
        if not found:
            continue
        if H[row][col] < 0:
            H[row] = [-v for v in H[row]]
            U[row] = [-v for v in U[row]]
        p = H[row][col]
        for i in range(row):
            q = H[i][col] // p
            if q:
                _row_addmul(H, i, row, -q)
                _row_addmul(U, i, row, -q)
        row += 1
    return H, U


@dataclass(frozen=True)
class SmithForm:
    """``U @ A @ V == diag(diagonal)`` with ``U``, ``V`` unimodular.

    ``diagonal`` has ``min(rows, cols)`` nonnegative entries forming a
    divisibility chain, zeros last. ``det_u``/``det_v`` are the
    determinants (+1 or -1) of the transforms.
    """

    diagonal: tuple[int, ...]
    U: Matrix
    V: Matrix
    det_u: int
    det_v: int

    @property
    def invariant_factors(self) -> tuple[int, ...]:
        return tuple(d for d in self.diagonal if d != 0)

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)


def smith_form(A: Sequence[Sequence[int]]) -> SmithForm:
    """Smith normal form by smallest-absolute-value pivoting."""
    S = _copy(A)
    r, c = len(S), _ncols(S)
    U, V = identity(r), identity(c)
    du = dv = 1
    for t in range(min(r, c)):
        while True:
            best = None
            for i in range(t, r):
                for j in range(t, c):
                    v = S[i][j]
                    if v and (best is None or abs(v) < abs(S[best[0]][best[1]])):
                        best = (i, j)
            if best is None:
                return SmithForm(_diag(S), U, V, du, dv)
            i, j = best
            if i != t:
                S[t], S[i] = S[i], S[t]
                U[t], U[i] = U[i], U[t]
                du = -du
            if j != t:
                for M in (S, V):
                    for row in M:
                        row[t], row[j] = row[j], row[t]
                dv = -dv
            p = S[t][t]
            clean = True
            for i in range(t + 1, r):
                if S[i][t]:
                    q = S[i][t] // p
                    _row_addmul(S, i, t, -q)
                    _row_addmul(U, i, t, -q)
                    clean = clean and S[i][t] == 0
            for j in range(t + 1, c):
                if S[t][j]:
                    q = S[t][j] // p
                    _col_addmul(S, j, t, -q)
                    _col_addmul(V, j, t, -q)
                    clean = clean and S[t][j] == 0
            if not clean:
                continue
            bad = next(
                (i for i in range(t + 1, r) for j in range(t + 1, c) if S[i][j] % p),
                None,
            )
            if bad is None:
                break
            _row_addmul(S, t, bad, 1)
            _row_addmul(U, t, bad, 1)
        if S[t][t] < 0:
            S[t] = [-v for v in S[t]]
            U[t] = [-v for v in U[t]]
            du = -du
    return SmithForm(_diag(S), U, V, du, dv)


def _diag(S: Matrix) -> tuple[int, ...]:
    return tuple(S[i][i] for i in range(min(len(S), _ncols(S))))


def det(A: Sequence[Sequence[int]]) -> int:
    """Exact determinant from the Smith form product and transform signs."""
    n = len(A)
    if any(len(row) != n for row in A):
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return 1
    sf = smith_form(A)
    return prod(sf.diagonal) * sf.det_u * sf.det_v


def rank(A: Sequence[Sequence[int]]) -> int:
    H, _ = hermite_form(A)
    return sum(1 for row in H if any(row))


def _rref(M: list[list[Fraction]], ncols: int) -> list[int]:
    """In-place Gauss-Jordan on the first ``ncols`` columns; returns pivot columns."""
    pivots = []
    row = 0
    for col in range(ncols):
        piv = next((i for i in range(row, len(M)) if M[i][col] != 0), None)
        if piv is None:
            continue
        M[row], M[piv] = M[piv], M[row]
        p = M[row][col]
        M[row] = [v / p for v in M[row]]
        for i in range(len(M)):
            if i != row and M[i][col] != 0:
                f = M[i][col]
                M[i] = [a - f * b for a, b in zip(M[i], M[row])]
        pivots.append(col)
        row += 1
        if row == len(M):
            break
    return pivots


def solve_rational(A: Sequence[Sequence[int]], b: Sequence[int]) -> list[Fraction] | None:
    """Solve ``A x = b`` exactly; ``None`` when the system is inconsistent.

    Free variables (rank-deficient ``A``) are set to zero.
    """
    n = _ncols(A)
    M = [[Fraction(v) for v in row] + [Fraction(bi)] for row, bi in zip(A, b)]
    pivots = _rref(M, n)
    for row in M[len(pivots):]:
        if row[n] != 0:
            return None
    x = [Fraction(0)] * n
    for i, col in enumerate(pivots):
        x[col] = M[i][n]
    return x


def inverse_rational(A: Sequence[Sequence[int]]) -> list[list[Fraction]]:
    n = len(A)
    M = [[Fraction(v) for v in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(A)]
    if len(_rref(M, n)) != n:
        raise ValueError("matrix is singular")
    return [row[n:] for row in M]


def inverse_unimodular(A: Sequence[Sequence[int]]) -> Matrix:
    inv = inverse_rational(A)
    if any(v.denominator != 1 for row in inv for v in row):
        raise ValueError("matrix is not unimodular")
    return [[v.numerator for v in row] for row in inv]


def adjugate(A: Sequence[Sequence[int]]) -> tuple[Matrix, int]:
    """``(adj, det)`` with ``A @ adj == det * I``; requires nonsingular ``A``."""
    d = det(A)
    if d == 0:
        raise ValueError("matrix is singular")
    inv = inverse_rational(A)
    return [[(v * d).numerator for v in row] for row in inv], d


@dataclass(frozen=True)
class UnimodularAffineMap:
    """``x -> linear @ x + translation`` with ``|det(linear)| == 1``."""

    linear: tuple[tuple[int, ...], ...]
    translation: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "linear", tuple(tuple(int(v) for v in r) for r in self.linear))
        object.__setattr__(self, "translation", tuple(int(v) for v in self.translation))
        n = len(self.translation)
        if len(self.linear) != n or any(len(r) != n for r in self.linear):
            raise ValueError("linear part must be square and match the translation")
        if n and abs(det(self.linear)) != 1:
            raise ValueError("linear part is not unimodular")

    @property
    def dim(self) -> int:
        return len(self.translation)

    @classmethod
    def identity(cls, n: int) -> "UnimodularAffineMap":
        return cls(tuple(map(tuple, identity(n))), (0,) * n)

    def __call__(self, x: Sequence[int]) -> tuple[int, ...]:
        return tuple(a + t for a, t in zip(matvec(self.linear, x), self.translation))

    def compose(self, other: "UnimodularAffineMap") -> "UnimodularAffineMap":
        """``self(other(x))``"""
        lin = matmul(self.linear, other.linear)
        return UnimodularAffineMap(tuple(map(tuple, lin)), self(other.translation))

    def inverse(self) -> "UnimodularAffineMap":
        inv = inverse_unimodular(self.linear)
        t = [-v for v in matvec(inv, self.translation)]
        return UnimodularAffineMap(tuple(map(tuple, inv)), tuple(t))
