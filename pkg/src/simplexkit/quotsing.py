"""Cyclic quotient singularities ``C^k / mu_n`` of type ``(a_1/n, ..., a_k/n)``."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, gcd
from typing import Sequence

from .charsum import PairingCertificate, pair_negations, units
from .errors import InvalidParams, NotIsolated, OddDimension, ParseError
from .limits import check_budget


@dataclass(frozen=True)
class SingularityType:
    n: int
    weights: tuple[int, ...]

    def __post_init__(self):
        if self.n < 2:
            raise InvalidParams("the group order n must be at least 2")
        w = tuple(int(a) % self.n for a in self.weights)
        if not w:
            raise InvalidParams("at least one weight is required")
        if 0 in w:
            raise InvalidParams("weights divisible by n split off a smooth factor; drop them")
        object.__setattr__(self, "weights", w)

    @property
    def dim(self) -> int:
        return len(self.weights)

    def __str__(self):
        return f"{self.n} " + " ".join(map(str, self.weights))


def parse_singularity(line: str) -> SingularityType:
    try:
        nums = [int(tok) for tok in line.split()]
    except ValueError as exc:
        raise ParseError(f"non-integer token in {line!r}") from exc
    if len(nums) < 2:
        raise ParseError("expected 'n a1 a2 ...'")
    return SingularityType(nums[0], tuple(nums[1:]))


def load_singularities(text: str) -> list[SingularityType]:
    out = []
    for raw in text.splitlines():
        line = raw.strip()
        if line and not line.startswith("#"):
            out.append(parse_singularity(line))
    return out


def is_isolated(s: SingularityType) -> bool:
    return all(gcd(a, s.n) == 1 for a in s.weights)


def is_gorenstein(s: SingularityType) -> bool:
    return sum(s.weights) % s.n == 0


def age(s: SingularityType, t: int) -> Fraction:
    """``sum_i {t * a_i / n}``"""
    return Fraction(sum(t * a % s.n for a in s.weights), s.n)


def mld(s: SingularityType) -> Fraction:
    """Minimal log-discrepancy, scanned over every ``t = 1..n-1``."""
    if not is_isolated(s):
        raise NotIsolated(f"type {s} is not isolated")
    return min(age(s, t) for t in range(1, s.n))


@dataclass(frozen=True)
class ClassificationVerdict:
    isolated: bool
    gorenstein: bool
    mld: Fraction
    pairing: PairingCertificate | None
    satisfies_thm18: bool


def classify_singularity(s: SingularityType) -> ClassificationVerdict:
    """Decide ``mld >= d`` and the negation pairing of a ``2d``-dimensional type.

    ``satisfies_thm18`` records that the two agree and that a paired type
    is Gorenstein.
    """
    if s.dim % 2:
        raise OddDimension(f"type {s} has odd dimension {s.dim}")
    value = mld(s)
    d = s.dim // 2
    pairs = pair_negations(s.weights, s.n)
    cert = None
    if pairs is not None:
        cert = PairingCertificate(s.n, s.weights, tuple(i for p in pairs for i in p))
    gor = is_gorenstein(s)
    ok = (value >= d) == (cert is not None) and (cert is None or gor)
    return ClassificationVerdict(True, gor, value, cert, ok)


@dataclass
class Thm18Report:
    n: int
    d: int
    isolated: int = 0
    gorenstein: int = 0
    mld_at_least_d: int = 0
    paired: int = 0
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def verify_thm18(n: int, d: int, budget: int | None = None) -> Thm18Report:
    """Exhaust isolated types of dimension ``2d`` mod ``n`` (weight multisets).

    The biconditional is checked on every isolated type, Gorenstein or
    not; a paired type that fails to be Gorenstein is also a violation.
    """
    if n < 2 or d < 1:
        raise InvalidParams("verify_thm18 needs n >= 2 and d >= 1")
    us = [u for u in units(n) if u]
    check_budget(2 * d * comb(len(us) + 2 * d - 1, 2 * d), budget)
    report = Thm18Report(n, d)
    for w in itertools.combinations_with_replacement(us, 2 * d):
        s = SingularityType(n, w)
        v = classify_singularity(s)
        report.isolated += 1
        report.gorenstein += v.gorenstein
        report.mld_at_least_d += v.mld >= d
        report.paired += v.pairing is not None
        if not v.satisfies_thm18:
            report.violations.append((w, v.mld, v.pairing is not None, v.gorenstein))
    return report


def brute_force_verdict(n: int, weights: Sequence[int]) -> tuple[Fraction, bool]:
    """Independent oracle: mld by double loop, pairing by trying every matching."""
    k = len(weights)
    best = None
    for t in range(1, n):
        total = Fraction(0)
        for a in weights:
            total += Fraction(t * a, n) - (t * a) // n
        best = total if best is None else min(best, total)

    def matchable(rest):
        if not rest:
            return True
        first, others = rest[0], rest[1:]
        for i, b in enumerate(others):
            if (first + b) % n == 0 and matchable(others[:i] + others[i + 1:]):
                return True
        return False

    return best, k % 2 == 0 and matchable(tuple(weights))
