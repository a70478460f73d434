"""Command-line interface: ``psets analyze|check|fuzz|jacobi|gen``.

Exit status: 0 success (for ``check``: the set is a P-set), 1 a negative
verdict or verification failures, 2 usage or input errors.
"""

import argparse
import json
import logging
import os
import sys
from fractions import Fraction
from itertools import combinations

from psets import __version__, _backend, core, enumeration
from psets.errors import PsetError
from psets.exactla import det, index_set, inverse, nullity, rank
from psets.matgen import FAMILIES, GenSpec, generate, graph_of
from psets.matrixio import format_matrix, read_matrix
from psets.oracle import CAMPAIGN_CAP, THEOREMS, campaign_specs, run_campaign, verify_matrix

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

log = logging.getLogger("psets")


class UsageError(Exception):
    pass


def _fmt_set(s):
    return "{" + ", ".join(map(str, s)) + "}"


def _fmt_sets(sets):
    return " ".join(_fmt_set(s) for s in sets) if sets else "none"


def build_report(a, verify=False):
    classes = core.classify_all(a)
    g = enumeration.pair_graph(a)
    report = {
        "n": a.n,
        "graph_edges": [list(e) for e in graph_of(a)],
        "nullity": nullity(a),
        "rank": rank(a),
        "vertex_classes": {str(i): c.value for i, c in enumerate(classes, start=1)},
        "p_vertices": list(g.vertices),
        "pair_edges": [list(e) for e in g.sorted_edges()],
        "maximal_psets": [list(s) for s in enumeration.maximal_cliques(g)],
    }
    if verify:
        report["verification"] = verify_matrix(a, cap=max(a.n, CAMPAIGN_CAP)).as_dict()
    return report


def render_report(r):
    lines = [
        f"n = {r['n']}",
        f"graph edges: {_fmt_sets(r['graph_edges'])}",
        f"nullity = {r['nullity']}, rank = {r['rank']}",
        "vertex classes:",
    ]
    lines += [f"  {i:>3}  {c}" for i, c in r["vertex_classes"].items()]
    lines += [
        f"P-vertices: {_fmt_set(r['p_vertices']) if r['p_vertices'] else 'none'}",
        f"pair-graph edges: {_fmt_sets(r['pair_edges'])}",
        f"maximal P-sets: {_fmt_sets(r['maximal_psets'])}",
    ]
    if "verification" in r:
        lines += _render_tallies(r["verification"])
    return "\n".join(lines) + "\n"


def _render_tallies(d):
    lines = [
        f"matrices checked: {d['matrices_checked']}  subsets: {d['subsets_checked']}  "
        f"P-sets found: {d['psets_found']}  nonsingular: {d['nonsingular']}",
        f"  {'check':<22}{'passed':>10}{'failed':>10}",
    ]
    lines += [f"  {t:<22}{d['passed'][t]:>10}{d['failed'][t]:>10}" for t in THEOREMS]
    if d["ok"]:
        lines.append("all checks passed")
    else:
        w = d["first_failure"]
        lines.append(f"FAILURES: {sum(d['failed'].values())}")
        lines.append(f"first failure: {w['theorem']} on subset {_fmt_set(w['subset'])}: {w['detail']}")
        if w["seed"] is not None:
            lines.append(f"  campaign seed {w['seed']}, matrix index {w['index']}")
    return lines


def cmd_analyze(args, out):
    a = read_matrix(args.path)
    r = build_report(a, verify=args.verify)
    out.append(json.dumps(r, indent=2) + "\n" if args.json else render_report(r))
    if args.verify and not r["verification"]["ok"]:
        return EXIT_FAIL
    return EXIT_OK


def _parse_set(text, n):
    text = text.strip().strip("{}")
    try:
        items = [int(t) for t in text.replace(" ", "").split(",") if t]
    except ValueError:
        raise UsageError(f"bad index list {text!r}") from None
    return index_set(items, n)


def cmd_check(args, out):
    a = read_matrix(args.path)
    alpha = _parse_set(args.set, a.n)
    verdict = core.is_pset(a, alpha)
    pairwise = core.pset_by_pairs(a, alpha) if len(alpha) >= 2 else None
    conds = core.theorem1_conditions(a, alpha) if alpha else None
    if args.json:
        r = {
            "set": list(alpha),
            "is_pset": verdict,
            "pairwise": pairwise,
            "cond_a": conds and conds.cond_a,
            "cond_b": conds and conds.cond_b,
            "cond_c": conds and conds.cond_c,
        }
        out.append(json.dumps(r, indent=2) + "\n")
    else:
        yn = {True: "yes", False: "no", None: "n/a"}
        tf = {True: "true", False: "false", None: "n/a"}
        out.append(
            f"set: {_fmt_set(alpha)}\n"
            f"P-set: {yn[verdict]}\n"
            f"pairwise: {yn[pairwise]}\n"
            f"(a) nullity condition: {tf[conds and conds.cond_a]}\n"
            f"(b) rank condition: {tf[conds and conds.cond_b]}\n"
            f"(c) row-space condition: {tf[conds and conds.cond_c]}\n"
        )
    return EXIT_OK if verdict else EXIT_FAIL


def _parse_range(text):
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            lo, hi = int(lo), int(hi)
        else:
            lo = hi = int(text)
    except ValueError:
        raise UsageError(f"bad order range {text!r}; use N or LO..HI") from None
    if lo < 0 or hi < lo:
        raise UsageError(f"bad order range {text!r}")
    return range(lo, hi + 1)


def _parse_densities(values):
    out = []
    for v in values:
        for t in v.split(","):
            try:
                out.append(Fraction(t))
            except (ValueError, ZeroDivisionError):
                raise UsageError(f"bad density {t!r}") from None
    return out


def cmd_fuzz(args, out):
    families = args.family or ["dense"]
    diagonals = ["zero", "random"] if args.diagonal == "mixed" else [args.diagonal]
    specs = campaign_specs(families, _parse_range(args.n), _parse_densities(args.density or ["1/2"]),
                           diagonals, args.bound, args.seed)
    with _backend.rank_mutation(args.mutate_rank or _backend.rank_mutation_enabled()):
        report = run_campaign(specs, args.count, cap=args.cap)
    d = report.as_dict()
    if args.witness_dir and report.failures:
        os.makedirs(args.witness_dir, exist_ok=True)
        for k, w in enumerate(report.failures):
            with open(os.path.join(args.witness_dir, f"witness-{k:03d}-{w.theorem}.txt"), "w") as fh:
                fh.write(w.to_text())
    out.append(json.dumps(d, indent=2) + "\n" if args.json else "\n".join(_render_tallies(d)) + "\n")
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_jacobi(args, out):
    a = read_matrix(args.path)
    d = det(a)
    if d == 0:
        raise UsageError("Jacobi's identity needs a nonsingular matrix; this one is singular")
    inv = inverse(a)
    bad = []
    total = 0
    for size in range(a.n + 1):
        for s in combinations(range(1, a.n + 1), size):
            total += 1
            if not core.jacobi_check(a, s, inverse_matrix=inv):
                bad.append(s)
    out.append(f"det(A) = {d}\nJacobi identity checked on {total} index sets: {len(bad)} failures\n")
    for s in bad[:20]:
        out.append(f"  fails on {_fmt_set(s)}\n")
    return EXIT_FAIL if bad else EXIT_OK


def cmd_gen(args, out):
    spec = GenSpec(n=args.n, family=args.family, entry_bound=args.bound,
                   density=Fraction(args.density), diagonal_mode=args.diagonal, seed=args.seed)
    text = format_matrix(generate(spec), comments=[f"generated by psets gen: {spec}"])
    if args.output:
        with open(args.output, "w", encoding="ascii", newline="\n") as fh:
            fh.write(text)
    else:
        out.append(text)
    return EXIT_OK


def make_parser():
    p = argparse.ArgumentParser(prog="psets", description="P-vertices and P-sets of symmetric rational matrices.")
    p.add_argument("--version", action="version", version=f"psets {__version__} ({_backend.BACKEND} kernel)")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="classify vertices and enumerate maximal P-sets")
    a.add_argument("path")
    a.add_argument("--json", action="store_true")
    a.add_argument("--verify", action="store_true", help="also run every brute-force check")
    a.set_defaults(func=cmd_analyze)

    c = sub.add_parser("check", help="test whether an index set is a P-set")
    c.add_argument("path")
    c.add_argument("--set", required=True, help="comma-separated 1-based indices, e.g. 2,4")
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_check)

    f = sub.add_parser("fuzz", help="verify all statements on generated matrices")
    f.add_argument("--family", action="append", choices=FAMILIES)
    f.add_argument("--n", default="2..6", help="order or range LO..HI")
    f.add_argument("--count", type=int, default=100)
    f.add_argument("--seed", type=int, default=0)
    f.add_argument("--bound", type=int, default=3)
    f.add_argument("--density", action="append", help="rational in [0,1]; comma list allowed")
    f.add_argument("--diagonal", choices=["zero", "random", "mixed"], default="mixed")
    f.add_argument("--cap", type=int, default=CAMPAIGN_CAP)
    f.add_argument("--witness-dir")
    f.add_argument("--mutate-rank", action="store_true", help="deliberately corrupt rank (harness self-test)")
    f.add_argument("--json", action="store_true")
    f.set_defaults(func=cmd_fuzz)

    j = sub.add_parser("jacobi", help="check Jacobi's identity for every index set")
    j.add_argument("path")
    j.set_defaults(func=cmd_jacobi)

    g = sub.add_parser("gen", help="write a generated matrix file")
    g.add_argument("--family", choices=FAMILIES, default="tree")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--bound", type=int, default=3)
    g.add_argument("--density", default="1/2")
    g.add_argument("--diagonal", choices=["zero", "random"], default="zero")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("-o", "--output")
    g.set_defaults(func=cmd_gen)
    return p


def main(argv=None):
    parser = make_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    out = []
    try:
        status = args.func(args, out)
    except (UsageError, PsetError, OSError, ValueError) as exc:
        sys.stdout.write("".join(out))
        sys.stdout.flush()
        print(f"psets {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write("".join(out))
    sys.stdout.flush()
    return status
