"""Command-line interface.

Subcommands: decide (run the existence decision for one SFT), chi (exact
Borel chromatic number), verify (re-check a witness or tile file), sweep
(whole families of generator sets), bench (timing breakdowns).

Exit codes: 0 success / yes / verified, 1 no / verification failed, 2 usage
error, 3 capacity budget exceeded.
"""

from __future__ import annotations

import argparse
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from itertools import combinations
from math import gcd

from . import __version__
from .errors import CapacityError
from .sft import GeneratorSet, coloring_sft, parse_sft_text
from .transition import DEFAULT_CODE_BUDGET, build, to_dot
from .period import decide, period, sccs
from .chromatic import bounds, chi
from .cache import cache_from_options, key_for_gens, key_for_sft
from .witness import (
    TwoTilesWitness,
    build_gamma,
    explain_tile_pair_failure,
    explain_two_tiles_failure,
    extract_certificate,
    read_tile_file,
    read_witness_file,
    write_witness_file,
)


def _add_common(parser):
    parser.add_argument(
        "--budget",
        type=int,
        default=DEFAULT_CODE_BUDGET,
        help="largest window-code space the engine may scan (default %(default)s)",
    )
    parser.add_argument(
        "--cache-dir",
        default=None,
        help="directory for the decision cache (or set BORELCHI_CACHE_DIR)",
    )
    parser.add_argument(
        "--format",
        choices=("text", "records"),
        default="text",
        help="text for humans, records for one key=value line per result",
    )


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="borelchi",
        description="Borel chromatic numbers of integer distance graphs "
        "via subshift transition graphs.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decide", help="decide existence of an equivariant map into an SFT")
    p.add_argument("-S", "--generators", help="comma-separated generators, e.g. 1,5,8")
    p.add_argument("--colors", type=int, help="number of colors (with -S)")
    p.add_argument("--sft", help="path to an SFT file (instead of -S/--colors)")
    p.add_argument("--witness-out", help="write a two-tiles witness here on yes")
    p.add_argument("--dot", help="write a DOT rendering of the transition graph here")
    _add_common(p)

    p = sub.add_parser("chi", help="exact Borel chromatic number of a generator set")
    p.add_argument("-S", "--generators", required=True)
    p.add_argument(
        "--method",
        choices=("auto", "scan-only", "bounds-only"),
        default="auto",
        help="auto uses closed forms when available; scan-only always scans",
    )
    p.add_argument(
        "--verify-fast-paths",
        action="store_true",
        help="re-derive any closed-form value with decision runs",
    )
    p.add_argument(
        "--enable-triple-fast-path",
        action="store_true",
        help="allow the conjectural three-generator closed form",
    )
    p.add_argument("--witness-out", help="write a two-tiles witness for the final value")
    _add_common(p)

    p = sub.add_parser("verify", help="re-verify a witness file or tile file")
    p.add_argument("path", help="file starting with 'gamma' (witness) or 'tiles'")
    p.add_argument("-S", "--generators", help="generator set the file certifies")
    p.add_argument("--colors", type=int, help="alphabet size (default: inferred)")
    p.add_argument("--sft", help="SFT file giving the constraints (witness files)")

    p = sub.add_parser("sweep", help="compute chi across a family of generator sets")
    p.add_argument("family", choices=("pairs", "triples", "odd", "all"))
    p.add_argument("--max", type=int, default=9, help="largest generator (default 9)")
    p.add_argument("--workers", type=int, default=1)
    _add_common(p)

    p = sub.add_parser("bench", help="time graph build / SCC / period phases")
    p.add_argument(
        "-S",
        "--generators",
        action="append",
        required=True,
        help="repeatable; one generator set per flag",
    )
    p.add_argument("--colors", default="3,4", help="comma-separated color counts")
    p.add_argument("--budget", type=int, default=DEFAULT_CODE_BUDGET)

    return parser


def _records_line(kind, **fields):
    parts = [kind]
    for key, value in fields.items():
        parts.append(f"{key}={value}")
    return " ".join(parts)


def _print_scc_table(out, graph, decision, limit=10):
    rows = sorted(decision.sccs, key=lambda s: -s.size)[:limit]
    out.write("scc  size      period\n")
    for scc in rows:
        p = period(graph, scc)
        out.write(f"{scc.scc_id:<4d} {scc.size:<9d} {p}\n")
    hidden = decision.scc_count - len(rows)
    if hidden > 0:
        out.write(f"... and {hidden} more components\n")


def _cmd_decide(args, out):
    cache = cache_from_options(args.cache_dir)
    if args.sft:
        with open(args.sft) as fh:
            sft = parse_sft_text(fh.read())
        label = f"sft:{args.sft}"
        key = key_for_sft(sft)
    else:
        if not args.generators or args.colors is None:
            raise ValueError("decide needs either --sft FILE or both -S and --colors")
        gens = GeneratorSet.parse(args.generators)
        sft = coloring_sft(gens, args.colors, budget=args.budget)
        label = f"S={gens} b={args.colors}"
        key = key_for_gens(gens, args.colors)

    graph = build(sft, code_budget=args.budget)
    decision = decide(sft, graph=graph)
    if cache is not None:
        cache.put(key, decision.answer)
        cache.save()

    answer = "yes" if decision.answer else "no"
    if args.format == "records":
        out.write(
            _records_line(
                "decision",
                instance=label.replace(" ", ";"),
                answer=answer,
                vertices=decision.vertex_count,
                edges=decision.edge_count,
                sccs=decision.scc_count,
            )
            + "\n"
        )
    else:
        out.write(f"instance: {label}\n")
        out.write(f"answer: {answer}\n")
        out.write(
            f"graph: {decision.vertex_count} vertices, "
            f"{decision.edge_count} edges, {decision.scc_count} components\n"
        )
        if decision.vertex_count:
            _print_scc_table(out, graph, decision)

    if args.dot:
        with open(args.dot, "w") as fh:
            fh.write(to_dot(graph))
        out.write(f"dot written to {args.dot}\n")

    if args.witness_out:
        if decision.answer:
            witness = extract_certificate(sft, decision=decision)
            write_witness_file(args.witness_out, witness)
            out.write(f"witness written to {args.witness_out}\n")
        else:
            out.write("no witness: answer is no\n")

    return 0 if decision.answer else 1


def _cmd_chi(args, out):
    gens = GeneratorSet.parse(args.generators)
    cache = cache_from_options(args.cache_dir)

    decide_fn = None
    if cache is not None:
        def decide_fn(g, b):
            key = key_for_gens(g, b)
            hit = cache.get(key)
            if hit is not None:
                return hit
            answer = decide(coloring_sft(g, b, budget=args.budget), code_budget=args.budget).answer
            cache.put(key, answer)
            return answer

    result = chi(
        gens,
        args.method,
        verify_fast_paths=args.verify_fast_paths,
        enable_triple_fast_path=args.enable_triple_fast_path,
        code_budget=args.budget,
        decide_fn=decide_fn,
    )
    if cache is not None:
        cache.save()

    decisions = ",".join(f"{b}:{'yes' if a else 'no'}" for b, a in sorted(result.per_b_decisions.items()))
    if args.format == "records":
        out.write(
            _records_line(
                "chi",
                S=gens,
                value=result.value,
                method=result.method,
                lower=result.bounds.lower,
                upper=result.bounds.upper,
                decisions=decisions or "-",
            )
            + "\n"
        )
    else:
        out.write(f"S: {gens}\n")
        out.write(f"chi: {result.value}\n")
        out.write(f"method: {result.method}\n")
        out.write(
            f"bounds: lower={result.bounds.lower} upper={result.bounds.upper} "
            f"clique={result.bounds.clique} core-chromatic={result.bounds.core_chromatic} "
            f"upper-source={result.bounds.upper_source}\n"
        )
        if decisions:
            out.write(f"decisions: {decisions}\n")

    if args.witness_out:
        sft = coloring_sft(gens, result.value, budget=args.budget)
        witness = extract_certificate(sft, code_budget=args.budget)
        write_witness_file(args.witness_out, witness)
        out.write(f"witness written to {args.witness_out}\n")
    return 0


def _cmd_verify(args, out):
    with open(args.path) as fh:
        first = fh.read().lstrip().split(None, 1)
    kind = first[0] if first else ""

    if kind == "tiles":
        if not args.generators:
            raise ValueError("verifying a tile file needs -S")
        gens = GeneratorSet.parse(args.generators)
        c1, c2, ell = read_tile_file(args.path)
        reason = explain_tile_pair_failure(c1, c2, gens, ell)
        if reason is None:
            out.write(
                f"verified: tile pair for S={gens}, ell={ell}, "
                f"p={len(c1) - ell}, q={len(c2) - ell}\n"
            )
            return 0
        out.write(f"FAILED: {reason}\n")
        return 1

    if kind == "gamma":
        n, p, q, labels = read_witness_file(args.path)
        if args.sft:
            with open(args.sft) as fh:
                sft = parse_sft_text(fh.read())
        elif args.generators:
            gens = GeneratorSet.parse(args.generators)
            colors = args.colors if args.colors else (max(labels) + 1 if labels else 1)
            sft = coloring_sft(gens, colors)
        else:
            raise ValueError("verifying a witness file needs -S or --sft")
        witness = TwoTilesWitness(build_gamma(n, p, q), labels, sft)
        reason = explain_two_tiles_failure(witness)
        if reason is None:
            out.write(f"verified: witness with n={n}, p={p}, q={q}\n")
            return 0
        out.write(f"FAILED: {reason}\n")
        return 1

    raise ValueError(f"unrecognized file kind {kind!r} (expected 'gamma' or 'tiles')")


def _family_sets(family, cap):
    if family == "pairs":
        return [
            (a, b)
            for a in range(1, cap + 1)
            for b in range(a + 1, cap + 1)
            if gcd(a, b) == 1
        ]
    if family == "triples":
        return [
            c
            for c in combinations(range(1, cap + 1), 3)
            if gcd(gcd(c[0], c[1]), c[2]) == 1
        ]
    if family == "odd":
        odds = [a for a in range(1, cap + 1, 2)]
        out = []
        for r in range(1, len(odds) + 1):
            for c in combinations(odds, r):
                g = c[0]
                for a in c[1:]:
                    g = gcd(g, a)
                if g == 1:
                    out.append(c)
        return out
    pool = list(range(1, cap + 1))
    out = []
    for r in range(1, len(pool) + 1):
        for c in combinations(pool, r):
            g = c[0]
            for a in c[1:]:
                g = gcd(g, a)
            if g == 1:
                out.append(c)
    return out


def _sweep_one(task):
    gens_text, budget = task
    result = chi(GeneratorSet.parse(gens_text), "auto", code_budget=budget)
    return (
        gens_text,
        result.value,
        result.method,
        result.bounds.lower,
        result.bounds.upper,
        dict(result.per_b_decisions),
    )


def _cmd_sweep(args, out):
    cache = cache_from_options(args.cache_dir)
    tasks = [(",".join(map(str, s)), args.budget) for s in _family_sets(args.family, args.max)]

    if args.workers > 1:
        with ProcessPoolExecutor(max_workers=args.workers) as pool:
            results = list(pool.map(_sweep_one, tasks))
    elif cache is not None:
        results = []
        for gens_text, budget in tasks:
            gens = GeneratorSet.parse(gens_text)

            def decide_fn(g, b):
                key = key_for_gens(g, b)
                hit = cache.get(key)
                if hit is not None:
                    return hit
                answer = decide(coloring_sft(g, b, budget=budget), code_budget=budget).answer
                cache.put(key, answer)
                return answer

            r = chi(gens, "auto", code_budget=budget, decide_fn=decide_fn)
            results.append(
                (gens_text, r.value, r.method, r.bounds.lower, r.bounds.upper,
                 dict(r.per_b_decisions))
            )
    else:
        results = [_sweep_one(t) for t in tasks]

    for gens_text, value, method, lower, upper, decisions in results:
        if cache is not None:
            for b, answer in decisions.items():
                cache.put(key_for_gens(GeneratorSet.parse(gens_text), b), answer)
        out.write(
            _records_line(
                "chi", S=gens_text, value=value, method=method, lower=lower, upper=upper
            )
            + "\n"
        )
    if cache is not None:
        cache.save()
    return 0


def _cmd_bench(args, out):
    color_list = [int(tok) for tok in args.colors.replace(",", " ").split()]
    for gens_text in args.generators:
        gens = GeneratorSet.parse(gens_text)
        for b in color_list:
            sft = coloring_sft(gens, b, budget=args.budget)
            t0 = time.perf_counter()
            graph = build(sft, code_budget=args.budget)
            t1 = time.perf_counter()
            comps = sccs(graph)
            t2 = time.perf_counter()
            for scc in comps:
                period(graph, scc)
            t3 = time.perf_counter()
            out.write(
                _records_line(
                    "bench",
                    S=gens,
                    b=b,
                    vertices=graph.vertex_count,
                    edges=graph.edge_count,
                    sccs=len(comps),
                    build_s=f"{t1 - t0:.4f}",
                    scc_s=f"{t2 - t1:.4f}",
                    period_s=f"{t3 - t2:.4f}",
                )
                + "\n"
            )
    return 0


_COMMANDS = {
    "decide": _cmd_decide,
    "chi": _cmd_chi,
    "verify": _cmd_verify,
    "sweep": _cmd_sweep,
    "bench": _cmd_bench,
}


def main(argv=None, out=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    out = out or sys.stdout
    try:
        return _COMMANDS[args.command](args, out)
    except CapacityError as exc:
        print(f"capacity exceeded: {exc}", file=sys.stderr)
        return 3
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def console_main():
    sys.exit(main())


if __name__ == "__main__":
    console_main()
