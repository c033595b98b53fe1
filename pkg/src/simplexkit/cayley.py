"""Cayley polytopes of lattice segments and the canonical simplices Delta(a, n).

A Cayley polytope ``Sigma_1 * ... * Sigma_d`` of segments in ``R^d`` lives in
the hyperplane ``x_1 + ... + x_d = 1`` of ``R^{2d}``. We embed it in
``R^{2d-1}`` by dropping the first Cayley coordinate, which is a lattice
isomorphism of that hyperplane onto ``Z^{2d-1}``.

:func:`cayley_decompose` turns an odd-dimensional simplex with basic facets
and lattice-free dilates into an explicit unimodular map onto some
``Delta(a_1, ..., a_{d-1}, n)``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import gcd, prod
from typing import Sequence

from . import linalg
from .charsum import PairingCertificate, find_pairing
from .errors import (
    DegenerateSimplex,
    FacetNotBasic,
    InvalidParams,
    NonCyclicGroup,
    NotLatticeFree,
    PairingNotFound,
)
from .linalg import UnimodularAffineMap
from .simplex import LatticeSimplex, facets, group_structure, h_star, is_basic

Segment = tuple[Sequence[int], Sequence[int]]


def cayley_point(i: int, u: Sequence[int], d: int) -> tuple[int, ...]:
    """Embedded image of ``e_i x u`` (``i`` is 0-based)."""
    c = [0] * d
    c[i] = 1
    return tuple(c[1:]) + tuple(u)


def cayley_build(segments: Sequence[Segment]) -> LatticeSimplex:
    d = len(segments)
    if d == 0:
        raise InvalidParams("need at least one segment")
    verts = []
    for i, (p, q) in enumerate(segments):
        if len(p) != d or len(q) != d:
            raise InvalidParams(f"segment {i} does not live in R^{d}")
        if tuple(p) == tuple(q):
            raise DegenerateSimplex(f"segment {i} is a point")
        verts += [cayley_point(i, p, d), cayley_point(i, q, d)]
    return LatticeSimplex(tuple(verts))


def family_segments(a: Sequence[int], n: int) -> list[Segment]:
    d = len(a) + 1
    zero = (0,) * d
    segs = [(zero, tuple(int(i == j) for j in range(d))) for i in range(d - 1)]
    segs.append((zero, tuple(a) + (n,)))
    return segs


def delta_family(a: Sequence[int], n: int) -> LatticeSimplex:
    """``Delta(a_1, ..., a_{d-1}, n)``, a ``(2d-1)``-simplex."""
    a = tuple(int(x) for x in a)
    if n < 1:
        raise InvalidParams("n must be positive")
    if gcd(prod(a), n) != 1:
        raise InvalidParams(f"gcd({'*'.join(map(str, a)) or 1}, {n}) != 1")
    return cayley_build(family_segments(a, n))


@dataclass(frozen=True)
class CayleyDecomposition:
    """``map`` sends the input simplex onto ``delta_family(a, n)``.

    ``weights`` are the barycentric numerators of the chosen generator of
    G(simplex) in input vertex order, normalized so the last one is 1;
    ``order`` lists the input vertex indices in the order they land on the
    canonical vertices.
    """

    map: UnimodularAffineMap
    a: tuple[int, ...]
    n: int
    weights: tuple[int, ...]
    order: tuple[int, ...]
    pairing: PairingCertificate | None

    @property
    def d(self) -> int:
        return len(self.a) + 1

    @property
    def segment_images(self) -> list[Segment]:
        return family_segments(self.a, self.n)


def _canonical_lifted(a: Sequence[int], n: int) -> list[list[int]]:
    return [list(v) + [1] for v in delta_family(a, n).vertices]


def cayley_decompose(S: LatticeSimplex) -> CayleyDecomposition:
    """Find a unimodular map from ``S`` onto some ``Delta(a, n)``.

    Raises FacetNotBasic or NotLatticeFree when the hypotheses fail.
    """
    if not S.is_full_dimensional:
        raise InvalidParams("simplex must be full-dimensional")
    D = S.ambient_dim
    if D % 2 == 0:
        raise InvalidParams(f"dimension {D} is even")
    d = (D + 1) // 2
    if not all(is_basic(F) for F in facets(S)):
        raise FacetNotBasic("some codimension-1 facet is not basic")
    n = h_star(S).single_jump(d)
    if n is None:
        raise NotLatticeFree(f"h* = {h_star(S)} is not of the form 1 + (n-1)t^{d}")

    M = S.lifted()
    if n == 1:
        a = (0,) * (d - 1)
        basis = M
        target = _canonical_lifted(a, 1)
        return _finish(S, basis, target, a, 1, (0,) * (2 * d), tuple(range(2 * d)), None)

    gs = group_structure(S)
    if gs.invariant_factors != (n,):
        raise NonCyclicGroup(f"G = {gs.invariant_factors}, expected cyclic of order {n}")
    sf = linalg.smith_form(M)
    gen_row = sf.U[-1]
    assert sf.diagonal[-1] == n
    raw = [u % n for u in gen_row]
    if any(gcd(x, n) != 1 for x in raw):
        raise NotLatticeFree(f"generator weights {raw} are not all units mod {n}")
    t = pow(raw[-1], -1, n)
    weights = tuple(t * x % n for x in raw)

    acc = linalg.vecmat(weights, M)
    assert all(v % n == 0 for v in acc)
    gen = [v // n for v in acc]

    cert = find_pairing(weights, n)
    last = 2 * d - 1
    pairs = [tuple(sorted(p)) for p in cert.pairs]
    tail = next((p for p in pairs if last in p), None)
    if tail is None:
        raise PairingNotFound("last vertex is unpaired")
    others = sorted(p for p in pairs if p is not tail)
    order = [i for p in others for i in p] + [tail[0], last]

    basis = [M[i] for i in order[:-1]]
    shift = [0] * (D + 1)
    for i in order[1:-2:2]:
        shift = [s + m for s, m in zip(shift, M[i])]
    basis.append([g - s for g, s in zip(gen, shift)])

    a = tuple(weights[order[2 * i]] for i in range(d - 1))
    target = _canonical_lifted(a, n)
    target = target[:-1] + [list(cayley_point(d - 1, [int(j == d - 1) for j in range(d)], d)) + [1]]
    return _finish(S, basis, target, a, n, weights, tuple(order), cert)


def _finish(S, basis, target, a, n, weights, order, cert) -> CayleyDecomposition:
    """Build the affine map from ``basis @ Phi == target`` and check it."""
    D = S.ambient_dim
    phi = linalg.matmul(linalg.inverse_unimodular(basis), target)
    if any(phi[i][D] != int(i == D) for i in range(D + 1)):
        raise ArithmeticError("lifted map does not preserve the affine hyperplane")
    linear = linalg.transpose([row[:D] for row in phi[:D]])
    translation = tuple(phi[D][:D])
    dec = CayleyDecomposition(
        UnimodularAffineMap(tuple(map(tuple, linear)), translation),
        tuple(a), n, tuple(weights), tuple(order), cert,
    )
    if not verify_decomposition(S, dec):
        raise ArithmeticError("decomposition failed its own verification")
    return dec


def verify_decomposition(S: LatticeSimplex, dec: CayleyDecomposition) -> bool:
    try:
        target = delta_family(dec.a, dec.n)
    except InvalidParams:
        return False
    if dec.map.dim != S.ambient_dim:
        return False
    image = sorted(dec.map(v) for v in S.vertices)
    return image == sorted(target.vertices)


def scramble(S: LatticeSimplex, seed) -> tuple[LatticeSimplex, UnimodularAffineMap]:
    """Apply a seeded random unimodular affine map and shuffle the vertices.

    The map is a product of ``2D`` elementary shears with coefficients in
    ``[-2, 2]`` followed by a translation with entries in ``[-5, 5]``.
    """
    rng = random.Random(seed)
    D = S.ambient_dim
    lin = linalg.identity(D)
    for _ in range(2 * D if D > 1 else 0):
        i, j = rng.sample(range(D), 2)
        c = rng.choice((-2, -1, 1, 2))
        lin[i] = [x + c * y for x, y in zip(lin[i], lin[j])]
    if D and rng.random() < 0.5:
        k = rng.randrange(D)
        lin[k] = [-x for x in lin[k]]
    trans = tuple(rng.randint(-5, 5) for _ in range(D))
    f = UnimodularAffineMap(tuple(map(tuple, lin)), trans)
    verts = [f(v) for v in S.vertices]
    rng.shuffle(verts)
    return LatticeSimplex(tuple(verts)), f
