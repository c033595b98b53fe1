"""Lattice simplices, fundamental parallelepipeds and h*-polynomials.

A simplex ``conv(v_1, ..., v_{k+1})`` in ``R^D`` is stored with its
vertices in input order; the order fixes the coordinates of every
:class:`ParPoint`. Full-dimensional simplices are handled through the
lifted vertex matrix whose rows are ``(v_i, 1)``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import lcm, prod
from typing import Iterable, Sequence

import numpy as np

from . import linalg
from .errors import DegenerateSimplex, InvalidParams, ParseError
from .limits import check_budget

Vector = tuple[int, ...]


@dataclass(frozen=True)
class LatticeSimplex:
    vertices: tuple[Vector, ...]

    def __post_init__(self):
        verts = tuple(tuple(int(x) for x in v) for v in self.vertices)
        object.__setattr__(self, "vertices", verts)
        if not verts:
            raise DegenerateSimplex("a simplex needs at least one vertex")
        D = len(verts[0])
        if any(len(v) != D for v in verts):
            raise ParseError("vertices have different lengths")
        if len(verts) > D + 1 or linalg.rank(lifted_matrix(verts)) != len(verts):
            raise DegenerateSimplex("vertices are affinely dependent")

    @property
    def ambient_dim(self) -> int:
        return len(self.vertices[0])

    @property
    def dim(self) -> int:
        return len(self.vertices) - 1

    @property
    def is_full_dimensional(self) -> bool:
        return self.dim == self.ambient_dim

    def lifted(self) -> linalg.Matrix:
        return lifted_matrix(self.vertices)


def lifted_matrix(vertices: Iterable[Sequence[int]]) -> linalg.Matrix:
    return [list(v) + [1] for v in vertices]


@dataclass(frozen=True)
class HStarPoly:
    coefficients: tuple[int, ...]

    @property
    def volume(self) -> int:
        """Normalized volume, the sum of the coefficients."""
        return sum(self.coefficients)

    def __getitem__(self, k: int) -> int:
        return self.coefficients[k] if 0 <= k < len(self.coefficients) else 0

    def single_jump(self, d: int) -> int | None:
        """``n`` if the polynomial equals ``1 + (n-1) t^d``, else ``None``."""
        if self[0] != 1:
            return None
        if any(c for k, c in enumerate(self.coefficients) if k not in (0, d)):
            return None
        return 1 + self[d]

    def __str__(self) -> str:
        terms = []
        for k, c in enumerate(self.coefficients):
            if c == 0:
                continue
            if k == 0:
                terms.append(str(c))
            else:
                coef = "" if c == 1 else f"{c}*"
                terms.append(f"{coef}t" + (f"^{k}" if k > 1 else ""))
        return " + ".join(terms) or "0"


@dataclass(frozen=True, order=True)
class ParPoint:
    """A lattice point ``sum(lam_i * (v_i, 1))`` of the half-open parallelepiped.

    ``point`` is the lifted integer vector; its last entry is ``degree``.
    """

    degree: int
    point: Vector
    lam: tuple[Fraction, ...]


@dataclass(frozen=True)
class GroupStructure:
    invariant_factors: tuple[int, ...]

    @property
    def order(self) -> int:
        return prod(self.invariant_factors)

    @property
    def is_cyclic(self) -> bool:
        return len(self.invariant_factors) <= 1


# -- file format -------------------------------------------------------------

def load_simplex(text: str) -> LatticeSimplex:
    """Parse ``D m`` followed by ``m`` vertex rows; ``#`` lines are comments."""
    rows = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            rows.append([int(tok) for tok in line.split()])
        except ValueError as exc:
            raise ParseError(f"non-integer token in line {raw!r}") from exc
    if not rows:
        raise ParseError("empty simplex file")
    header, body = rows[0], rows[1:]
    if len(header) != 2:
        raise ParseError("header must be 'D m'")
    D, m = header
    if D < 0 or m < 1:
        raise ParseError(f"bad header {D} {m}")
    if len(body) != m:
        raise ParseError(f"expected {m} vertex rows, got {len(body)}")
    for row in body:
        if len(row) != D:
            raise ParseError(f"vertex {row} does not have {D} coordinates")
    return LatticeSimplex(tuple(map(tuple, body)))


def dump_simplex(S: LatticeSimplex, comment: str | None = None) -> str:
    lines = [] if comment is None else [f"# {c}" for c in comment.splitlines()]
    lines.append(f"{S.ambient_dim} {len(S.vertices)}")
    lines.extend(" ".join(map(str, v)) for v in sorted(S.vertices))
    return "\n".join(lines) + "\n"


# -- faces and bases ---------------------------------------------------------

def facets(S: LatticeSimplex) -> list[LatticeSimplex]:
    if S.dim < 1:
        raise InvalidParams("a point has no facets")
    return [LatticeSimplex(S.vertices[:i] + S.vertices[i + 1:]) for i in range(S.dim + 1)]


def edge_matrix(S: LatticeSimplex) -> linalg.Matrix:
    """Rows ``v_i - v_last`` for the first ``k`` vertices."""
    last = S.vertices[-1]
    return [[a - b for a, b in zip(v, last)] for v in S.vertices[:-1]]


def is_basic(S: LatticeSimplex) -> bool:
    if S.dim == 0:
        return True
    sf = linalg.smith_form(edge_matrix(S))
    return sf.rank == S.dim and all(d == 1 for d in sf.invariant_factors)


def _require_full(S: LatticeSimplex) -> None:
    if not S.is_full_dimensional:
        raise InvalidParams(f"{S.dim}-simplex in R^{S.ambient_dim} is not full-dimensional")


def group_structure(S: LatticeSimplex) -> GroupStructure:
    _require_full(S)
    sf = linalg.smith_form(S.lifted())
    return GroupStructure(tuple(d for d in sf.diagonal if d > 1))


def normalized_volume(S: LatticeSimplex) -> int:
    """``dim! * vol`` measured in the lattice of the affine span of ``S``."""
    if S.is_full_dimensional:
        return abs(linalg.det(S.lifted()))
    if S.dim == 0:
        return 1
    return prod(linalg.smith_form(edge_matrix(S)).invariant_factors)


# -- parallelepiped ----------------------------------------------------------

def par_points(S: LatticeSimplex) -> list[ParPoint]:
    """Lattice points of the half-open parallelepiped, one per element of G(S).

    With ``U M V = diag(d)`` for the lifted vertex matrix ``M``, the class
    of ``y`` in ``prod Z/d_i`` has barycentric vector ``y diag(d)^-1 U``
    modulo 1.
    """
    _require_full(S)
    M = S.lifted()
    sf = linalg.smith_form(M)
    L = lcm(*sf.diagonal)
    factors = [(d, [u * (L // d) for u in row]) for d, row in zip(sf.diagonal, sf.U) if d > 1]
    width = len(M)
    out = []
    for y in itertools.product(*(range(d) for d, _ in factors)):
        num = [0] * width
        for yi, (_, row) in zip(y, factors):
            if yi:
                for j, u in enumerate(row):
                    num[j] += yi * u
        num = [v % L for v in num]
        out.append(_make_par_point(M, num, L))
    out.sort()
    return out


def _make_par_point(M: linalg.Matrix, num: Sequence[int], denom: int) -> ParPoint:
    acc = linalg.vecmat(num, M)
    if any(v % denom for v in acc):
        raise ArithmeticError("parallelepiped point is not integral")
    point = tuple(v // denom for v in acc)
    lam = tuple(Fraction(v, denom) for v in num)
    return ParPoint(point[-1], point, lam)


def h_star(S: LatticeSimplex) -> HStarPoly:
    coeffs = [0] * (S.ambient_dim + 1)
    for p in par_points(S):
        coeffs[p.degree] += 1
    return HStarPoly(tuple(coeffs))


# -- box scans ---------------------------------------------------------------

def _grid(lo: Sequence[int], hi: Sequence[int]) -> Iterable[np.ndarray]:
    """Yield the integer points of the box ``lo <= x <= hi`` in chunks."""
    n = len(lo)
    if n == 0:
        yield np.zeros((1, 0), dtype=np.int64)
        return
    axes = [np.arange(a, b + 1, dtype=np.int64) for a, b in zip(lo[1:], hi[1:])]
    if axes:
        rest = np.stack(np.meshgrid(*axes, indexing="ij"), axis=-1).reshape(-1, n - 1)
    else:
        rest = np.zeros((1, 0), dtype=np.int64)
    for x0 in range(lo[0], hi[0] + 1):
        first = np.full((len(rest), 1), x0, dtype=np.int64)
        yield np.hstack([first, rest])


def _box_scan(lo, hi, adj, extra, keep, budget):
    """Points ``x`` in the box whose values ``x @ adj[:n] + extra`` satisfy ``keep``.

    ``adj`` is an integer matrix with ``len(lo)`` leading rows used for
    ``x``; ``extra`` is a constant integer row added afterwards.
    """
    if any(a > b for a, b in zip(lo, hi)):
        return []
    size = prod(b - a + 1 for a, b in zip(lo, hi))
    check_budget(size, budget)
    n = len(lo)
    bound = max(max(abs(a), abs(b)) for a, b in zip(lo, hi)) if n else 0
    amax = max((abs(v) for row in adj for v in row), default=0)
    emax = max((abs(v) for v in extra), default=0)
    exact = (n * bound * amax + emax) >= 2**62
    A = np.array(adj[:n], dtype=object if exact else np.int64).reshape(n, -1)
    E = np.array(extra, dtype=object if exact else np.int64)
    found = []
    for chunk in _grid(lo, hi):
        X = chunk.astype(object) if exact else chunk
        vals = X @ A + E
        mask = keep(vals)
        found.extend(tuple(int(v) for v in row) for row in chunk[mask])
    found.sort()
    return found


def lattice_points_in_dilate(
    S: LatticeSimplex, k: int, interior_only: bool = False, budget: int | None = None
) -> list[Vector]:
    """Lattice points of ``k*S`` (or of its interior) by exhaustive box scan.

    Membership is decided by exact barycentric coordinates: all ``>= 0``
    for the closed dilate, all ``> 0`` for the interior.
    """
    if k < 1:
        raise InvalidParams("dilation factor must be positive")
    _require_full(S)
    adj, d = linalg.adjugate(S.lifted())
    s = 1 if d > 0 else -1
    D = S.ambient_dim
    lo = [k * min(v[j] for v in S.vertices) for j in range(D)]
    hi = [k * max(v[j] for v in S.vertices) for j in range(D)]
    extra = [k * a for a in adj[D]]
    if interior_only:
        keep = lambda vals: np.all(s * vals > 0, axis=1)  # noqa: E731
    else:
        keep = lambda vals: np.all(s * vals >= 0, axis=1)  # noqa: E731
    return _box_scan(lo, hi, adj, extra, keep, budget)


def barycentric(S: LatticeSimplex, x: Sequence[int], k: int = 1) -> list[Fraction]:
    """Coefficients ``lam`` with ``sum lam_i v_i = x`` and ``sum lam_i = k``."""
    _require_full(S)
    sol = linalg.solve_rational(linalg.transpose(S.lifted()), list(x) + [k])
    assert sol is not None
    return sol


def in_dilate(S: LatticeSimplex, x: Sequence[int], k: int = 1) -> bool:
    return all(c >= 0 for c in barycentric(S, x, k))


def par_points_naive(S: LatticeSimplex, budget: int | None = None) -> list[ParPoint]:
    """Half-open parallelepiped by scanning its bounding box. Test oracle."""
    _require_full(S)
    M = S.lifted()
    adj, d = linalg.adjugate(M)
    s, ad = (1, d) if d > 0 else (-1, -d)
    width = len(M)
    lo = [sum(min(0, row[j]) for row in M) for j in range(width)]
    hi = [sum(max(0, row[j]) for row in M) for j in range(width)]
    keep = lambda vals: np.all((s * vals >= 0) & (s * vals < ad), axis=1)  # noqa: E731
    pts = _box_scan(lo, hi, adj, [0] * width, keep, budget)
    out = []
    for p in pts:
        lam = tuple(Fraction(v, d) for v in linalg.vecmat(p, adj))
        out.append(ParPoint(p[-1], p, lam))
    out.sort()
    return out


# -- normal form -------------------------------------------------------------

def normal_form(S: LatticeSimplex) -> tuple[tuple[int, ...], ...]:
    """Complete invariant under affine unimodular maps and vertex relabelling.

    Minimum over vertex orders of the column-style Hermite form of the
    lifted matrix. Cost grows like ``(D+1)!``; meant for small dimensions.
    """
    _require_full(S)
    best = None
    for perm in itertools.permutations(S.vertices):
        H, _ = linalg.hermite_form(linalg.transpose(lifted_matrix(perm)))
        key = tuple(map(tuple, linalg.transpose(H)))
        if best is None or key < best:
            best = key
    return best


# -- three equivalent conditions ---------------------------------------------

@dataclass(frozen=True)
class Prop24Report:
    d: int
    cond1: bool
    cond2: bool
    cond3: bool
    n: int | None
    facets_basic: bool
    interiors_empty: bool | None
    h_star: HStarPoly

    @property
    def consistent(self) -> bool:
        return self.cond1 == self.cond2 == self.cond3


def check_prop24(S: LatticeSimplex, budget: int | None = None) -> Prop24Report:
    """Evaluate three lattice-freeness conditions of an odd-dimensional simplex.

    1. every lattice point of ``k*S``, ``k < d``, has integral barycentric
       coordinates (read off the parallelepiped degrees);
    2. ``Int(k*S)`` has no lattice points for ``k < d`` and all facets are
       basic (box scans plus Smith forms);
    3. ``h* = 1 + (n-1) t^d``.

    For ``D = 2d - 1`` the three must agree.
    """
    _require_full(S)
    D = S.ambient_dim
    if D % 2 == 0:
        raise InvalidParams(f"dimension {D} is even")
    d = (D + 1) // 2
    pts = par_points(S)
    cond1 = not any(1 <= p.degree <= d - 1 for p in pts)

    facets_basic = all(is_basic(F) for F in facets(S))
    interiors_empty = None
    if facets_basic:
        interiors_empty = all(
            not lattice_points_in_dilate(S, k, interior_only=True, budget=budget)
            for k in range(1, d)
        )
    cond2 = facets_basic and bool(interiors_empty)

    hs = h_star(S)
    n = hs.single_jump(d)
    return Prop24Report(d, cond1, cond2, n is not None, n, facets_basic, interiors_empty, hs)
