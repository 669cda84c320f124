"""
Command-line entry point.

Exit codes: 0 success, 1 verification failure, 2 usage or input error,
3 resource bound exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .monoid import verify_relations
from .muinv import (
    Composition, bar_string, compositions, parse_mu_involution, rank_mu,
    top_mu,
)
from .perm import Permutation
from .poset import (
    DEFAULT_MAX_N, ResourceBoundError, build_poset, chain_lengths, d_set,
    d_set_mu, double_edge_count, maximal_chains, orbit_w_set,
    path_double_counts, to_dot, to_json, verify_top_wset, w_set,
)
from .schubert import EXPONENT_MODES, check_conjecture, restriction_class, schubert

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BOUND = 0, 1, 2, 3

CHAIN_LIST_MAX_N = 8
CONJECTURE_MAX_N = 8


class UsageError(Exception):
    pass


def _mu(args) -> Composition:
    if args.mu is None:
        raise UsageError("--mu is required")
    return Composition.parse(args.mu)


def _mu_or_n(args) -> Composition:
    if (args.mu is None) == (args.n is None):
        raise UsageError("give exactly one of --mu and --n")
    return Composition.parse(args.mu) if args.mu is not None else Composition((args.n,))


def _check_bound(n: int, limit: int | None, default: int):
    bound = default if limit is None else limit
    if n > bound:
        raise ResourceBoundError(f"n = {n} exceeds the bound {bound}; raise it with --limit")
    return bound


def cmd_enumerate(args, out) -> int:
    mu = _mu(args)
    poset = build_poset(mu, max_n=_check_bound(mu.n, args.limit, DEFAULT_MAX_N))
    rows = sorted(poset.nodes.values(), key=lambda p: p.perm.word)
    if args.format == "json":
        data = [{"id": str(p), "word": list(p.perm.word), "rank": poset.rank[str(p)],
                 "dcount": double_edge_count(p)} for p in rows]
        json.dump({"mu": list(mu.parts), "nodes": data}, out, indent=2)
        out.write("\n")
    else:
        for p in rows:
            out.write(f"{p}\trank={poset.rank[str(p)]}\tdcount={double_edge_count(p)}\n")
    return EXIT_OK


def cmd_poset(args, out) -> int:
    mu = _mu(args)
    poset = build_poset(mu, max_n=_check_bound(mu.n, args.limit, DEFAULT_MAX_N))
    if args.format == "json":
        json.dump(to_json(poset), out, indent=2)
        out.write("\n")
    elif args.format == "dot":
        out.write(to_dot(poset))
    else:
        out.write(f"mu={mu} nodes={len(poset.nodes)} edges={len(poset.edges)} "
                  f"height={poset.height} bottom={poset.bottom} top={poset.top}\n")
        for e in poset.edges:
            out.write(f"{e.source} --s_{e.label}--> {e.target}\t{e.multiplicity.value}\n")
    return EXIT_OK


def cmd_wset(args, out) -> int:
    if args.pi is not None:
        pi = parse_mu_involution(args.pi)
        if args.mu is not None and Composition.parse(args.mu) != pi.mu:
            raise UsageError(f"--pi {args.pi} does not match --mu {args.mu}")
    else:
        pi = top_mu(_mu(args))
    poset = build_poset(pi.mu, max_n=_check_bound(pi.n, args.limit, DEFAULT_MAX_N))
    ws = orbit_w_set(pi, poset) if args.inverse else w_set(pi, poset)
    for w in ws.sorted():
        out.write(f"{w}\n")
    return EXIT_OK


def cmd_dset(args, out) -> int:
    mu = _mu_or_n(args)
    if mu.k == 1:
        for w in sorted(d_set(mu.n), key=lambda p: p.word):
            out.write(f"[{w}]\n")
    else:
        for w in sorted(d_set_mu(mu), key=lambda p: p.word):
            out.write(f"{bar_string(w, mu)}\n")
    return EXIT_OK


def cmd_chains(args, out) -> int:
    mu = _mu(args)
    if args.list:
        poset = build_poset(mu, max_n=_check_bound(mu.n, args.limit, CHAIN_LIST_MAX_N))
        for chain in maximal_chains(poset, count_only=False):
            out.write(" ".join(f"s_{e.label}" for e in chain) + "\n")
    else:
        poset = build_poset(mu, max_n=_check_bound(mu.n, args.limit, DEFAULT_MAX_N))
        out.write(f"{maximal_chains(poset)}\n")
    return EXIT_OK


def _verify_one(mu: Composition, bound: int, out) -> bool:
    poset = build_poset(mu, max_n=bound)
    checks = []
    rel = verify_relations(poset.nodes.values())
    checks.append(("relations", rel.ok, f"{rel.checked} checks, {len(rel.violations)} violations"))
    rep = verify_top_wset(mu, max_n=bound, poset=poset)
    checks.append(("top W-set = D_mu", rep.ok,
                   f"|W|={len(rep.w_top)} |D|={len(rep.d_mu)} check failures={len(rep.check_failures)}"))
    lengths = chain_lengths(poset)
    height = rank_mu(poset.top)
    steps = all(poset.rank[e.target] == poset.rank[e.source] + 1 for e in poset.edges)
    checks.append(("graded", lengths == {height} and steps, f"chain lengths {sorted(lengths)}, rank {height}"))
    doubles = path_double_counts(poset)
    inv = all(doubles[k] == {double_edge_count(p)} for k, p in poset.nodes.items())
    checks.append(("double-edge invariance", inv, f"{len(poset.nodes)} nodes"))
    ok = True
    for name, passed, detail in checks:
        ok &= passed
        out.write(f"{'PASS' if passed else 'FAIL'} mu={mu} {name}: {detail}\n")
    return ok


def cmd_verify(args, out) -> int:
    if (args.mu is None) == (args.n is None):
        raise UsageError("give exactly one of --mu and --n")
    if args.mu is not None:
        mus = [Composition.parse(args.mu)]
    else:
        mus = list(compositions(args.n))
    n = mus[0].n
    bound = _check_bound(n, args.limit, DEFAULT_MAX_N)
    ok = True
    for mu in mus:
        ok &= _verify_one(mu, bound, out)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_schubert(args, out) -> int:
    if args.w is None:
        raise UsageError("--w is required")
    w = Permutation.parse(args.w)
    sc = schubert(w)
    if args.format == "json":
        json.dump({"w": list(w.word), "poly": sc.poly.to_json()}, out)
        out.write("\n")
    else:
        out.write(f"{sc.poly}\n")
    return EXIT_OK


def cmd_restrict(args, out) -> int:
    mu = _mu_or_n(args)
    _check_bound(mu.n, args.limit, CONJECTURE_MAX_N)
    poly = restriction_class(mu, args.exponent_mode)
    if args.format == "json":
        json.dump({"mu": list(mu.parts), "mode": args.exponent_mode, "poly": poly.to_json()}, out)
        out.write("\n")
    else:
        out.write(f"{poly}\n")
    return EXIT_OK


def cmd_conjecture(args, out) -> int:
    if args.n is None:
        raise UsageError("--n is required")
    _check_bound(args.n, args.limit, CONJECTURE_MAX_N)
    rep = check_conjecture(args.n)
    if rep.ok:
        out.write(f"PASS: {rep.restriction}\n")
        return EXIT_OK
    out.write(f"FAIL: restriction {rep.restriction}\n      product {rep.product}\n"
              f"      difference {rep.diff()}\n")
    return EXIT_FAIL


COMMANDS = {
    "enumerate": (cmd_enumerate, "list I_mu with ranks and double-edge counts"),
    "poset": (cmd_poset, "export the Hasse diagram"),
    "wset": (cmd_wset, "W-set of a mu-involution (default: the top element)"),
    "dset": (cmd_dset, "the permutation set D_n or D_mu"),
    "chains": (cmd_chains, "count or list maximal chains"),
    "verify": (cmd_verify, "run all checks on one or all compositions"),
    "schubert": (cmd_schubert, "Schubert polynomial of a permutation"),
    "restrict": (cmd_restrict, "restriction class of the closed orbit"),
    "conjecture": (cmd_conjecture, "compare the restriction class with the binomial product"),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="complete-quadrics",
        description="Weak order on mu-involutions and restriction classes.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, helptext) in COMMANDS.items():
        p = sub.add_parser(name, help=helptext)
        p.add_argument("--mu", help="composition, e.g. 3,1")
        p.add_argument("--n", type=int, help="size n")
        p.add_argument("--pi", help="mu-involution, e.g. 26|8351|7|94")
        p.add_argument("--w", help="permutation in one-line notation, e.g. 3421")
        p.add_argument("--format", choices=("text", "json", "dot"), default="text")
        p.add_argument("--limit", type=int, help="override the size bound on n")
        p.add_argument("--exponent-mode", choices=EXPONENT_MODES, default="strings")
        if name == "wset":
            p.add_argument("--inverse", action="store_true",
                           help="print inverses (the W-set of the orbit closure)")
        if name == "chains":
            p.add_argument("--list", action="store_true", help="list chains as label sequences")
    return parser


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    func = COMMANDS[args.command][0]
    try:
        return func(args, out)
    except ResourceBoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BOUND
    except (UsageError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
