"""Periodic Bernoulli function, Stickelberger elements and Dirichlet characters.

Also home of the negation-pairing engine: a tuple of units ``a_1..a_d``
mod ``n`` whose values ``B1(t*a_i/n)`` sum to zero for every ``t`` can be
split into pairs ``a + a' = 0 (mod n)``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, gcd, lcm
from typing import Sequence

from . import linalg
from .cyclotomic import CyclotomicNumber, rank_over_field
from .errors import InvalidParams, NoPairing, NotCoprime, NotZeroSum, PairingNotFound
from .limits import check_budget

HALF = Fraction(1, 2)


def b1(x) -> Fraction:
    x = Fraction(x)
    frac = x - (x.numerator // x.denominator)
    return frac - HALF if frac else Fraction(0)


def _b1_scaled(r: int, n: int) -> int:
    """``2n * B1(r/n)`` for an integer ``r``."""
    r %= n
    return 2 * r - n if r else 0


# -- arithmetic mod n --------------------------------------------------------

def units(n: int) -> list[int]:
    if n < 1:
        raise InvalidParams("modulus must be positive")
    return [g for g in range(n) if gcd(g, n) == 1]


def totient(n: int) -> int:
    return len(units(n))


def factorize(n: int) -> list[tuple[int, int]]:
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            k = 0
            while n % p == 0:
                n //= p
                k += 1
            out.append((p, k))
        p += 1
    if n > 1:
        out.append((n, 1))
    return out


def _mult_order(g: int, n: int) -> int:
    k, x = 1, g % n
    while x != 1 % n:
        x = x * g % n
        k += 1
    return k


def _crt_lift(r: int, q: int, n: int) -> int:
    """The unit mod ``n`` that is ``r`` mod ``q`` and ``1`` mod ``n/q``."""
    rest = n // q
    return (r * rest * pow(rest, -1, q) + q * pow(q, -1, rest)) % n if rest > 1 else r % n


def unit_group_generators(n: int) -> list[tuple[int, int]]:
    """``(generator, order)`` pairs whose cyclic groups multiply to ``(Z/n)*``.

    One primitive root per odd prime power, ``-1`` and ``5`` for ``2^k``
    with ``k >= 3``, ``-1`` for ``4``; lifted to ``n`` by CRT.
    """
    gens = []
    for p, k in factorize(n):
        q = p**k
        if p == 2:
            if k >= 2:
                gens.append((_crt_lift(q - 1, q, n), 2))
            if k >= 3:
                gens.append((_crt_lift(5, q, n), 2 ** (k - 2)))
            continue
        phi = q - q // p
        root = next(g for g in range(2, q) if g % p and _mult_order(g, q) == phi)
        gens.append((_crt_lift(root, q, n), phi))
    return gens


def discrete_logs(n: int) -> dict[int, tuple[int, ...]]:
    """Exponent vector of every unit with respect to :func:`unit_group_generators`."""
    gens = unit_group_generators(n)
    table = {}
    for exps in itertools.product(*(range(o) for _, o in gens)):
        u = 1 % n
        for (g, _), e in zip(gens, exps):
            u = u * pow(g, e, n) % n
        table[u] = exps
    assert len(table) == totient(n)
    return table


def group_exponent(n: int) -> int:
    return lcm(*(o for _, o in unit_group_generators(n)))


# -- group algebra -----------------------------------------------------------

@dataclass(frozen=True)
class GroupAlgebraVector:
    """``sum_g coeffs[g] * sigma_g`` over the units ``g`` mod ``n``."""

    n: int
    coeffs: dict[int, Fraction]

    def __post_init__(self):
        if sorted(self.coeffs) != units(self.n):
            raise InvalidParams("keys must be exactly the units mod n")

    def as_list(self) -> list[Fraction]:
        return [self.coeffs[g] for g in sorted(self.coeffs)]


def stickelberger(x, n: int) -> GroupAlgebraVector:
    x = Fraction(x)
    if (x * n).denominator != 1:
        raise InvalidParams(f"{x} is not in (1/{n})Z")
    return GroupAlgebraVector(n, {g: b1(g * x) for g in units(n)})


def _stickelberger_matrix(n: int) -> list[list[int]]:
    """Rows ``2n * S(k/n)`` for ``k = 0..n-1``."""
    us = units(n)
    return [[_b1_scaled(g * k, n) for g in us] for k in range(n)]


def stickelberger_rank(n: int) -> int:
    if n < 3:
        raise InvalidParams("stickelberger_rank needs n >= 3")
    return linalg.rank(_stickelberger_matrix(n))


def u_perp_basis_check(n: int) -> bool:
    """Check that the functionals ``sigma_g* + sigma_{-g}*`` form a basis of U-perp."""
    if n < 3:
        raise InvalidParams("u_perp_basis_check needs n >= 3")
    us = units(n)
    index = {g: i for i, g in enumerate(us)}
    S = _stickelberger_matrix(n)
    for row in S:
        for g in us:
            if row[index[g]] + row[index[(-g) % n]] != 0:
                return False
    functionals = []
    for g in us:
        f = [0] * len(us)
        f[index[g]] += 1
        f[index[(-g) % n]] += 1
        functionals.append(f)
    rank_u = linalg.rank(S)
    rank_f = linalg.rank(functionals)
    phi = len(us)
    # U-perp has dimension phi - rank U; the functionals lie in it.
    return rank_f == phi // 2 and rank_f == phi - rank_u and 2 * rank_u == phi


# -- characters --------------------------------------------------------------

@dataclass(frozen=True)
class DirichletCharacter:
    """A character of ``(Z/n)*`` given by exponents on the fixed generators.

    Values are roots of unity ``zeta_order^e``; tables store the exponent
    ``e``. ``primitive`` maps residues mod ``conductor`` coprime to it onto
    exponents of the induced primitive character.
    """

    modulus: int
    exponents: tuple[int, ...]
    order: int
    table: dict[int, int] = field(repr=False)
    conductor: int
    primitive: dict[int, int] = field(repr=False)

    @property
    def is_odd(self) -> bool:
        return self.table[(-1) % self.modulus] != 0

    @property
    def is_trivial(self) -> bool:
        return self.order == 1

    def exponent_at(self, k: int) -> int | None:
        """Exponent of the Dirichlet value at ``k``; ``None`` when it is 0."""
        f = self.conductor
        if gcd(k, f) != 1:
            return None
        return self.primitive[k % f]

    def value(self, k: int, field_order: int | None = None) -> CyclotomicNumber:
        m = field_order or self.order
        e = self.exponent_at(k)
        if e is None:
            return CyclotomicNumber(m)
        return CyclotomicNumber.zeta(m, e * (m // self.order))

    def __mul__(self, other: "DirichletCharacter") -> tuple[int, ...]:
        """Exponent vector of the product character."""
        orders = [o for _, o in unit_group_generators(self.modulus)]
        return tuple((a + b) % o for a, b, o in zip(self.exponents, other.exponents, orders))


def _conductor(n: int, table: dict[int, int]) -> int:
    for f in range(1, n + 1):
        if n % f == 0 and all(e == 0 for u, e in table.items() if u % f == 1 % f):
            return f
    return n


def characters(n: int) -> list[DirichletCharacter]:
    gens = unit_group_generators(n)
    logs = discrete_logs(n)
    orders = [o for _, o in gens]
    out = []
    for exps in itertools.product(*(range(o) for o in orders)):
        m = lcm(*(o // gcd(o, c) for o, c in zip(orders, exps)))
        step = [c * m // o for o, c in zip(orders, exps)]
        table = {u: sum(s * l for s, l in zip(step, lg)) % m for u, lg in logs.items()}
        f = _conductor(n, table)
        prim = {}
        for u, e in table.items():
            prim.setdefault(u % f, e)
        out.append(DirichletCharacter(n, exps, m, table, f, prim))
    return out


def conductor(chi: DirichletCharacter) -> int:
    return chi.conductor


def b1_chi(chi: DirichletCharacter, field_order: int | None = None) -> CyclotomicNumber:
    """Generalized Bernoulli number ``sum_{k=1}^{f} chi(k) B1(k/f)``, exactly."""
    f = chi.conductor
    m = field_order or chi.order
    total = CyclotomicNumber(m)
    for k in range(1, f + 1):
        e = chi.exponent_at(k)
        if e is not None:
            total = total + chi.value(k, m) * b1(Fraction(k, f))
    return total


def u_chi_vectors(n: int) -> dict[tuple[int, ...], list[CyclotomicNumber]]:
    """``u_chi = sum_{k=1}^{f} chi(k) S(k/f)`` for every odd character, in Q(zeta_M)."""
    M = group_exponent(n)
    us = units(n)
    out = {}
    for chi in characters(n):
        if not chi.is_odd:
            continue
        f = chi.conductor
        vec = [CyclotomicNumber(M) for _ in us]
        for k in range(1, f + 1):
            if chi.exponent_at(k) is None:
                continue
            val = chi.value(k, M)
            for i, g in enumerate(us):
                c = b1(Fraction(k * g, f))
                if c:
                    vec[i] = vec[i] + val * c
        out[chi.exponents] = vec
    return out


def u_chi_in_span_check(n: int) -> bool:
    """The odd-character vectors ``u_chi`` equal ``B_{1,chi} chi(g^-1)`` and are independent."""
    if n < 3:
        raise InvalidParams("u_chi_in_span_check needs n >= 3")
    M = group_exponent(n)
    us = units(n)
    vectors = u_chi_vectors(n)
    by_exps = {chi.exponents: chi for chi in characters(n)}
    for exps, vec in vectors.items():
        chi = by_exps[exps]
        b = b1_chi(chi, M)
        for g, entry in zip(us, vec):
            if entry != b * chi.value(pow(g, -1, n), M):
                return False
    return len(vectors) == len(us) // 2 and rank_over_field(list(vectors.values())) == len(vectors)


# -- pairings ----------------------------------------------------------------

@dataclass(frozen=True)
class PairingCertificate:
    """``sigma`` lists 0-based indices; consecutive entries form the pairs."""

    n: int
    a: tuple[int, ...]
    sigma: tuple[int, ...]

    @property
    def pairs(self) -> list[tuple[int, int]]:
        return [(self.sigma[i], self.sigma[i + 1]) for i in range(0, len(self.sigma), 2)]

    def verify(self) -> bool:
        if sorted(self.sigma) != list(range(len(self.a))) or len(self.a) % 2:
            return False
        return all((self.a[i] + self.a[j]) % self.n == 0 for i, j in self.pairs)


def zero_sum_witness(a: Sequence[int], n: int) -> tuple[int, Fraction] | None:
    """First ``t`` in ``0..n-1`` with ``sum B1(t*a_i/n) != 0``, with the sum."""
    for t in range(n):
        s = sum(_b1_scaled(t * x, n) for x in a)
        if s:
            return t, Fraction(s, 2 * n)
    return None


def pair_negations(a: Sequence[int], n: int) -> list[tuple[int, int]] | None:
    """Lexicographically smallest perfect matching with ``a_i + a_j = 0 (mod n)``.

    Each smallest unmatched index takes its smallest compatible partner;
    partners of equal residue are interchangeable, so this never paints
    itself into a corner.
    """
    if len(a) % 2:
        return None
    free = list(range(len(a)))
    pairs = []
    while free:
        i = free.pop(0)
        j = next((j for j in free if (a[i] + a[j]) % n == 0), None)
        if j is None:
            return None
        free.remove(j)
        pairs.append((i, j))
    return pairs


def find_pairing(a: Sequence[int], n: int) -> PairingCertificate:
    """Certificate that ``a`` splits into negation pairs mod ``n``.

    Raises NotCoprime, NotZeroSum (hypothesis fails, with a witness ``t``)
    or NoPairing. For ``n >= 3`` NoPairing after a passing hypothesis is a
    bug and surfaces as PairingNotFound.
    """
    if n < 1:
        raise InvalidParams("modulus must be positive")
    a = tuple(int(x) for x in a)
    bad = [x for x in a if gcd(x, n) != 1]
    if bad:
        raise NotCoprime(f"weights {bad} are not coprime to {n}")
    w = zero_sum_witness(a, n)
    if w is not None:
        raise NotZeroSum(*w)
    pairs = pair_negations(a, n)
    if pairs is None:
        if n >= 3:
            raise PairingNotFound(f"{a} mod {n} has zero Bernoulli sums but no pairing")
        raise NoPairing(f"{a} mod {n} has no pairing")
    return PairingCertificate(n, a, tuple(i for p in pairs for i in p))


@dataclass
class Prop15Report:
    n: int
    d: int
    tuples: int = 0
    hypothesis: int = 0
    paired: int = 0
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def verify_prop15(n: int, d: int, budget: int | None = None) -> Prop15Report:
    """Exhaust all multisets of ``d`` units mod ``n``.

    Every tuple passing the zero-sum hypothesis must be pairable (so
    ``d`` must be even), and every pairable tuple must pass it.
    """
    if n < 3 or d < 1:
        raise InvalidParams("verify_prop15 needs n >= 3 and d >= 1")
    us = units(n)
    check_budget(d * len(us) ** d, budget)
    report = Prop15Report(n, d)
    for a in itertools.combinations_with_replacement(us, d):
        report.tuples += 1
        try:
            cert = find_pairing(a, n)
        except NotZeroSum:
            if pair_negations(a, n) is not None:
                report.violations.append((a, "pairable but hypothesis fails"))
            continue
        except PairingNotFound:
            report.hypothesis += 1
            report.violations.append((a, "hypothesis holds but no pairing"))
            continue
        report.hypothesis += 1
        if not cert.verify():
            report.violations.append((a, "bad certificate"))
            continue
        report.paired += 1
        if d % 2:
            report.violations.append((a, "odd d satisfies hypothesis"))
    assert report.tuples == comb(len(us) + d - 1, d)
    return report


def format_tuple(n: int, a: Sequence[int]) -> str:
    return f"{n}: " + " ".join(map(str, a))
