"""Batch verification sweeps.

Each sweep returns a :class:`SuiteResult`; the CLI ``batch`` command, the
scripts in ``scripts/`` and the acceptance tests all run these.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field
from math import gcd, lcm, prod
from typing import Callable

from . import charsum, linalg, quotsing
from .cayley import cayley_build, cayley_decompose, delta_family, scramble, verify_decomposition
from .errors import DegenerateSimplex, FacetNotBasic, NotLatticeFree
from .simplex import (
    LatticeSimplex,
    barycentric,
    check_prop24,
    group_structure,
    h_star,
    lattice_points_in_dilate,
    normal_form,
    par_points,
    par_points_naive,
)

DEFAULT_SEED = 20240601


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    violations: list = field(default_factory=list)
    elapsed: float = 0.0
    notes: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.violations

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = "".join(f", {k}={v}" for k, v in self.notes.items())
        return (f"[{status}] {self.name}: {self.checked} checked, "
                f"{len(self.violations)} violations{extra} ({self.elapsed:.1f}s)")


def _timed(fn: Callable[..., SuiteResult]) -> Callable[..., SuiteResult]:
    def wrapper(*args, **kwargs):
        t0 = time.perf_counter()
        res = fn(*args, **kwargs)
        res.elapsed = time.perf_counter() - t0
        return res

    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


def family_params(d: int, n_max: int):
    """Every ``(a, n)`` with ``a`` in ``[0, n)^(d-1)``, ``n <= n_max`` and the gcd condition."""
    for n in range(1, n_max + 1):
        for a in itertools.product(range(n), repeat=d - 1):
            if gcd(prod(a), n) == 1:
                yield a, n


def counterexample(p: int, q: int) -> LatticeSimplex:
    """Cayley polytope of ``conv(0, (1,0,0))``, ``conv(0, (1,p,0))``, ``conv(0, (1,0,q))``."""
    return cayley_build([((0, 0, 0), (1, 0, 0)), ((0, 0, 0), (1, p, 0)), ((0, 0, 0), (1, 0, q))])


def _det3(a, b, c) -> int:
    return (a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0])
            + a[2] * (b[0] * c[1] - b[1] * c[0]))


def _decomposes(S: LatticeSimplex) -> bool:
    try:
        dec = cayley_decompose(S)
    except (FacetNotBasic, NotLatticeFree):
        return False
    return verify_decomposition(S, dec)


@_timed
def white3d(box: int = 3) -> SuiteResult:
    """Tetrahedra ``conv(0, p, q, r)`` with ``p, q, r`` in ``[0, box]^3``, up to equivalence:
    empty iff the Cayley decomposition succeeds."""
    res = SuiteResult("white3d")
    pts = [p for p in itertools.product(range(box + 1), repeat=3) if any(p)]
    classes = {}
    for a, b, c in itertools.combinations(pts, 3):
        if _det3(a, b, c):
            S = LatticeSimplex(((0, 0, 0), a, b, c))
            classes.setdefault(normal_form(S), S)
    empty = 0
    for S in classes.values():
        is_empty = len(lattice_points_in_dilate(S, 1)) == 4
        empty += is_empty
        if is_empty != _decomposes(S):
            res.violations.append(S.vertices)
        res.checked += 1
    res.notes["empty_classes"] = empty
    return res


def random_simplex(rng: random.Random, D: int, lo: int, hi: int) -> LatticeSimplex:
    while True:
        verts = tuple(tuple(rng.randint(lo, hi) for _ in range(D)) for _ in range(D + 1))
        try:
            return LatticeSimplex(verts)
        except DegenerateSimplex:
            continue


@_timed
def prop24(count: int = 500, n_max: int = 7, seed: int = DEFAULT_SEED) -> SuiteResult:
    """The three lattice-freeness conditions agree on random 5-simplices and all Delta(a1, a2, n)."""
    res = SuiteResult("prop24")
    rng = random.Random(seed)
    samples = [random_simplex(rng, 5, -3, 3) for _ in range(count)]
    samples += [delta_family(a, n) for a, n in family_params(3, n_max)]
    all_true = 0
    for S in samples:
        rep = check_prop24(S)
        res.checked += 1
        all_true += rep.cond1
        if not rep.consistent:
            res.violations.append((S.vertices, rep.cond1, rep.cond2, rep.cond3))
    res.notes["all_true"] = all_true
    return res


@_timed
def hstar_family(n_max: int = 7, d_max: int = 4) -> SuiteResult:
    """``h*(Delta(a, n)) == 1 + (n-1) t^d`` exactly."""
    res = SuiteResult("hstar")
    for d in range(1, d_max + 1):
        for a, n in family_params(d, n_max):
            expected = [0] * (2 * d)
            expected[0] += 1
            expected[d] += n - 1
            got = list(h_star(delta_family(a, n)).coefficients)
            res.checked += 1
            if got != expected:
                res.violations.append((a, n, got))
    return res


@_timed
def roundtrip(count: int = 200, d_max: int = 4, n_max: int = 11, seed: int = DEFAULT_SEED) -> SuiteResult:
    """Scrambled Delta(a, n) instances decompose, verify, and recover ``n``."""
    res = SuiteResult("roundtrip")
    rng = random.Random(seed)
    for _ in range(count):
        d = rng.randint(1, d_max)
        n = rng.randint(1, n_max)
        while True:
            a = tuple(rng.randrange(n) for _ in range(d - 1))
            if gcd(prod(a), n) == 1:
                break
        T, _ = scramble(delta_family(a, n), rng.getrandbits(32))
        res.checked += 1
        try:
            dec = cayley_decompose(T)
            ok = verify_decomposition(T, dec) and dec.n == n
        except (FacetNotBasic, NotLatticeFree) as exc:
            ok = False
            dec = exc
        if not ok:
            res.violations.append((a, n, T.vertices, repr(dec)))
    return res


@_timed
def counterexamples(values=(2, 3, 4)) -> SuiteResult:
    """Group, parallelepiped size and the explicit points of 2*Delta for the (p, q) family."""
    res = SuiteResult("counterexample")
    for p, q in itertools.product(values, repeat=2):
        S = counterexample(p, q)
        expected = tuple(x for x in (gcd(p, q), lcm(p, q)) if x > 1)
        problems = []
        if group_structure(S).invariant_factors != expected:
            problems.append("group")
        if len(par_points(S)) != p * q:
            problems.append("par")
        listed = [(1, 0, 1, k, 0) for k in range(1, p)] + [(0, 1, 1, 0, j) for j in range(1, q)]
        for x in listed:
            lam = barycentric(S, x, 2)
            if min(lam) < 0 or all(c.denominator == 1 for c in lam):
                problems.append(("point", x))
        res.checked += 1
        if problems:
            res.violations.append(((p, q), problems))
    return res


@_timed
def thm31(n_min: int = 3, n_max: int = 60) -> SuiteResult:
    """Stickelberger span has dimension phi(n)/2 and sigma_g* + sigma_-g* spans its annihilator."""
    res = SuiteResult("thm31")
    for n in range(n_min, n_max + 1):
        half = charsum.totient(n) // 2
        r = charsum.stickelberger_rank(n)
        basis_ok = charsum.u_perp_basis_check(n)
        res.checked += 1
        if r != half or not basis_ok:
            res.violations.append((n, r, half, basis_ok))
    return res


@_timed
def odd_b1chi(n_max: int = 50) -> SuiteResult:
    """Exact nonvanishing of B_{1,chi} for every odd character of modulus <= n_max."""
    res = SuiteResult("odd-b1chi")
    for n in range(1, n_max + 1):
        for chi in charsum.characters(n):
            if chi.is_odd:
                res.checked += 1
                if charsum.b1_chi(chi).is_zero():
                    res.violations.append((n, chi.exponents))
    return res


@_timed
def prop15(n_min: int = 3, n_max: int = 20, ds=(2, 3, 4)) -> SuiteResult:
    res = SuiteResult("prop15")
    satisfied = 0
    for n in range(n_min, n_max + 1):
        for d in ds:
            rep = charsum.verify_prop15(n, d)
            res.checked += rep.tuples
            satisfied += rep.hypothesis
            res.violations += [(n, d, v) for v in rep.violations]
    res.notes["hypothesis_tuples"] = satisfied
    return res


@_timed
def thm18(n_min: int = 2, n_max: int = 15, ds=(2, 3)) -> SuiteResult:
    """mld >= d iff negation-paired, over all isolated types; paired implies Gorenstein."""
    res = SuiteResult("thm18")
    gor = paired = 0
    for n in range(n_min, n_max + 1):
        for d in ds:
            rep = quotsing.verify_thm18(n, d)
            res.checked += rep.isolated
            gor += rep.gorenstein
            paired += rep.paired
            res.violations += [(n, d, v) for v in rep.violations]
    res.notes["gorenstein"] = gor
    res.notes["paired"] = paired
    return res


@_timed
def par_oracle(count: int = 100, max_det: int = 60, seed: int = DEFAULT_SEED) -> SuiteResult:
    """SNF enumeration of the parallelepiped equals the naive box scan."""
    res = SuiteResult("par_oracle")
    rng = random.Random(seed)
    for i in range(count):
        D = 2 + i % 4
        bound = 3 if D <= 3 else 2
        while True:
            S = random_simplex(rng, D, -bound, bound)
            if abs(linalg.det(S.lifted())) <= max_det:
                break
        res.checked += 1
        fast, slow = par_points(S), par_points_naive(S)
        if fast != slow or len(fast) != abs(linalg.det(S.lifted())):
            res.violations.append(S.vertices)
    return res


SUITES = {
    "white3d": white3d,
    "prop24": prop24,
    "hstar": hstar_family,
    "roundtrip": roundtrip,
    "counterexample": counterexamples,
    "thm31": thm31,
    "odd-b1chi": odd_b1chi,
    "prop15": prop15,
    "thm18": thm18,
    "par-oracle": par_oracle,
}
