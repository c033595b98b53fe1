"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 input error, 3 resource
limit. Reports are deterministic ``key: value`` lines.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from . import charsum, quotsing
from .cayley import cayley_decompose, delta_family, scramble
from .errors import (
    FacetNotBasic,
    NotLatticeFree,
    PairingNotFound,
    ParseError,
    ResourceLimit,
    SimplexKitError,
)
from .limits import BUDGET_ENV
from .simplex import check_prop24, dump_simplex, group_structure, h_star, load_simplex
from .suites import DEFAULT_SEED, SUITES, counterexample

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_LIMIT = 0, 1, 2, 3


class Report:
    def __init__(self, fmt: str, title: str):
        self.fmt = fmt
        self.title = title
        self.items: list[tuple[str, object]] = []

    def add(self, key: str, value) -> None:
        self.items.append((key, value))

    def render(self) -> str:
        if self.fmt == "kv":
            return "".join(f"{k}: {v}\n" for k, v in self.items)
        width = max((len(k) for k, _ in self.items), default=0)
        lines = [f"== {self.title} =="]
        lines += [f"{k.ljust(width)} : {v}" for k, v in self.items]
        return "\n".join(lines) + "\n"


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from exc


def _ints(values) -> str:
    return " ".join(map(str, values))


def cmd_hstar(args, rep: Report) -> int:
    S = load_simplex(_read(args.file))
    hs = h_star(S)
    rep.add("dimension", S.ambient_dim)
    rep.add("volume", hs.volume)
    rep.add("h_star", _ints(hs.coefficients))
    rep.add("polynomial", hs)
    rep.add("group", _ints(group_structure(S).invariant_factors) or "trivial")
    return EXIT_OK


def cmd_classify_simplex(args, rep: Report) -> int:
    S = load_simplex(_read(args.file))
    r = check_prop24(S)
    rep.add("dimension", S.ambient_dim)
    rep.add("d", r.d)
    rep.add("h_star", _ints(r.h_star.coefficients))
    rep.add("facets_basic", r.facets_basic)
    rep.add("cond1_integral_dilates", r.cond1)
    rep.add("cond2_empty_interiors_basic_facets", r.cond2)
    rep.add("cond3_h_star_single_jump", r.cond3)
    if r.n is not None:
        rep.add("n", r.n)
    rep.add("consistent", r.consistent)
    return EXIT_OK if r.consistent else EXIT_FAIL


def cmd_decompose(args, rep: Report) -> int:
    S = load_simplex(_read(args.file))
    rep.add("dimension", S.ambient_dim)
    try:
        dec = cayley_decompose(S)
    except (FacetNotBasic, NotLatticeFree) as exc:
        rep.add("decomposable", False)
        rep.add("reason", f"{type(exc).__name__}: {exc}")
        return EXIT_FAIL
    rep.add("decomposable", True)
    rep.add("d", dec.d)
    rep.add("n", dec.n)
    rep.add("a", _ints(dec.a) or "-")
    rep.add("weights", _ints(dec.weights))
    rep.add("vertex_order", _ints(dec.order))
    for i, row in enumerate(dec.map.linear):
        rep.add(f"map_row_{i}", _ints(row))
    rep.add("translation", _ints(dec.map.translation))
    for i, (p, q) in enumerate(dec.segment_images):
        rep.add(f"segment_{i}", f"({_ints(p)}) -- ({_ints(q)})")
    rep.add("verified", True)
    return EXIT_OK


def _emit_simplex(S, comment=None) -> int:
    sys.stdout.write(dump_simplex(S, comment))
    return EXIT_OK


def cmd_delta_family(args, rep: Report) -> int:
    S = delta_family(args.a or [], args.n)
    return _emit_simplex(S, f"Delta({', '.join(map(str, (args.a or []) + [args.n]))})")


def cmd_counterexample(args, rep: Report) -> int:
    return _emit_simplex(counterexample(args.p, args.q), f"counterexample p={args.p} q={args.q}")


def cmd_scramble(args, rep: Report) -> int:
    S = load_simplex(_read(args.file))
    T, f = scramble(S, args.seed)
    lines = [f"seed: {args.seed}"]
    lines += [f"map_row_{i}: {_ints(r)}" for i, r in enumerate(f.linear)]
    lines.append(f"translation: {_ints(f.translation)}")
    return _emit_simplex(T, "\n".join(lines))


def cmd_stickelberger_rank(args, rep: Report) -> int:
    r = charsum.stickelberger_rank(args.n)
    half = charsum.totient(args.n) // 2
    basis = charsum.u_perp_basis_check(args.n)
    rep.add("n", args.n)
    rep.add("rank", r)
    rep.add("phi_half", half)
    rep.add("u_perp_basis", basis)
    return EXIT_OK if r == half and basis else EXIT_FAIL


def cmd_verify_bernoulli(args, rep: Report) -> int:
    r = charsum.verify_prop15(args.n, args.d)
    rep.add("n", r.n)
    rep.add("d", r.d)
    rep.add("tuples", r.tuples)
    rep.add("hypothesis_holds", r.hypothesis)
    rep.add("paired", r.paired)
    rep.add("violations", len(r.violations))
    for a, why in r.violations:
        rep.add("violation", f"{charsum.format_tuple(r.n, a)} ({why})")
    return EXIT_OK if r.ok else EXIT_FAIL


def cmd_b1chi(args, rep: Report) -> int:
    rep.add("n", args.n)
    nonzero_odd = True
    for chi in charsum.characters(args.n):
        b = charsum.b1_chi(chi)
        parity = "odd" if chi.is_odd else "even"
        if chi.is_odd and b.is_zero():
            nonzero_odd = False
        rep.add(f"chi[{','.join(map(str, chi.exponents))}]",
                f"order={chi.order} conductor={chi.conductor} {parity} B1={b}")
    rep.add("odd_nonzero", nonzero_odd)
    return EXIT_OK if nonzero_odd else EXIT_FAIL


def _sing_report(s, rep: Report, prefix: str = "") -> bool:
    v = quotsing.classify_singularity(s)
    rep.add(prefix + "type", s)
    rep.add(prefix + "isolated", v.isolated)
    rep.add(prefix + "gorenstein", v.gorenstein)
    rep.add(prefix + "mld", v.mld)
    rep.add(prefix + "mld_at_least_d", v.mld >= s.dim // 2)
    if v.pairing is not None:
        pairs = " ".join(f"({s.weights[i]},{s.weights[j]})" for i, j in v.pairing.pairs)
        rep.add(prefix + "pairing", pairs)
    else:
        rep.add(prefix + "pairing", "none")
    rep.add(prefix + "satisfies_thm18", v.satisfies_thm18)
    return v.satisfies_thm18


def cmd_mld(args, rep: Report) -> int:
    s = quotsing.SingularityType(args.values[0], tuple(args.values[1:]))
    rep.add("type", s)
    rep.add("isolated", quotsing.is_isolated(s))
    rep.add("gorenstein", quotsing.is_gorenstein(s))
    rep.add("mld", quotsing.mld(s))
    return EXIT_OK


def cmd_classify_sing(args, rep: Report) -> int:
    if len(args.values) == 1 and len(args.values[0].split()) == 1 and not args.values[0].lstrip("-").isdigit():
        types = quotsing.load_singularities(_read(args.values[0]))
    else:
        types = [quotsing.parse_singularity(" ".join(args.values))]
    ok = True
    for i, s in enumerate(types):
        ok &= _sing_report(s, rep, f"{i}." if len(types) > 1 else "")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_verify_thm18(args, rep: Report) -> int:
    r = quotsing.verify_thm18(args.n, args.d)
    rep.add("n", r.n)
    rep.add("dimension", 2 * r.d)
    rep.add("isolated_types", r.isolated)
    rep.add("gorenstein", r.gorenstein)
    rep.add("mld_at_least_d", r.mld_at_least_d)
    rep.add("paired", r.paired)
    rep.add("violations", len(r.violations))
    return EXIT_OK if r.ok else EXIT_FAIL


def cmd_batch(args, rep: Report) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    rep.add("seed", DEFAULT_SEED)
    ok = True
    for name in names:
        res = SUITES[name]()
        ok &= res.passed
        rep.add(f"{name}.checked", res.checked)
        for k, v in res.notes.items():
            rep.add(f"{name}.{k}", v)
        rep.add(f"{name}.violations", len(res.violations))
        rep.add(f"{name}.status", "PASS" if res.passed else "FAIL")
    return EXIT_OK if ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="simplexkit", description=__doc__.splitlines()[0])
    p.add_argument("--format", choices=("text", "kv"), default="text")
    p.add_argument("--budget", type=int, help=f"candidate cap for enumerations (env {BUDGET_ENV})")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        sp = sub.add_parser(name, help=help_)
        sp.set_defaults(func=func)
        return sp

    for name, func, help_ in [
        ("hstar", cmd_hstar, "h*-polynomial and group of a simplex file"),
        ("classify-simplex", cmd_classify_simplex, "three lattice-freeness conditions"),
        ("decompose", cmd_decompose, "Cayley decomposition of a (2d-1)-simplex"),
    ]:
        add(name, func, help_).add_argument("file", help="simplex file, '-' for stdin")

    sp = add("delta-family", cmd_delta_family, "write Delta(a_1..a_{d-1}, n)")
    sp.add_argument("-a", type=int, nargs="*", default=[])
    sp.add_argument("-n", type=int, required=True)

    sp = add("counterexample", cmd_counterexample, "write the non-basic-facet 5-simplex")
    sp.add_argument("-p", type=int, required=True)
    sp.add_argument("-q", type=int, required=True)

    sp = add("scramble", cmd_scramble, "apply a seeded unimodular map")
    sp.add_argument("file")
    sp.add_argument("--seed", type=int, default=0)

    add("stickelberger-rank", cmd_stickelberger_rank, "rank of the Stickelberger span").add_argument(
        "-n", type=int, required=True)

    sp = add("verify-bernoulli", cmd_verify_bernoulli, "exhaustive Bernoulli zero-sum pairing check")
    sp.add_argument("-n", type=int, required=True)
    sp.add_argument("-d", type=int, required=True, help="tuple length")

    add("b1chi", cmd_b1chi, "generalized Bernoulli numbers of all characters mod n").add_argument(
        "-n", type=int, required=True)

    add("mld", cmd_mld, "minimal log-discrepancy of 'n a1 a2 ...'").add_argument(
        "values", type=int, nargs="+")
    add("classify-sing", cmd_classify_sing, "classify 'n a1 ... a2d' or a file of such lines").add_argument(
        "values", nargs="+")

    sp = add("verify-thm18", cmd_verify_thm18, "exhaustive mld/pairing check")
    sp.add_argument("-n", type=int, required=True)
    sp.add_argument("-d", type=int, required=True, help="half the dimension (2d weights)")

    add("batch", cmd_batch, "run a verification sweep").add_argument(
        "suite", choices=list(SUITES) + ["all"])
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.budget is not None:
        if args.budget <= 0:
            parser.error("--budget must be positive")
        os.environ[BUDGET_ENV] = str(args.budget)
    rep = Report(args.format, args.command)
    try:
        code = args.func(args, rep)
    except PairingNotFound as exc:
        print(f"simplexkit: internal verification failure: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except ResourceLimit as exc:
        print(f"simplexkit: resource limit: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except (SimplexKitError, ValueError) as exc:
        print(f"simplexkit: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if rep.items:
        sys.stdout.write(rep.render())
    return code


if __name__ == "__main__":
    sys.exit(main())
