"""Command-line interface.

Exit codes: 0 success, 2 bad input or parameters (including non-bipartite
graphs), 3 invalid scripted matchings, 4 instance above the oracle limit,
5 a checked property was violated.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction
from pathlib import Path

from . import _backend
from .approx import ScriptedProvider, check_lemma1, check_lemma2, check_ratio, ratio_bound, solve
from .errors import InvalidK, InvalidProvider, NotBipartite, ParseError, TightnessViolation, TooLarge
from .generators import random_bipartite, random_bipartite_m
from .graph import format_edge_list, format_solution, is_k_dependent, read_graph, write_graph
from .matching import format_matchings, parse_matchings
from .oracle import exact_max_k_dependent, kdep_limit
from .verify import DEFAULT_PS, property_sweep, tight_sweep
from .worstcase import generate, metadata_json

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_MATCHINGS = 3
EXIT_TOO_LARGE = 4
EXIT_VIOLATION = 5


class CLIError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _frac(x: Fraction) -> dict:
    return {"num": x.numerator, "den": x.denominator}


def _render_text(report: dict, indent: int = 0) -> list[str]:
    lines = []
    pad = "  " * indent
    for key, value in report.items():
        if isinstance(value, dict) and set(value) == {"num", "den"}:
            lines.append(f"{pad}{key}: {value['num']}/{value['den']}")
        elif isinstance(value, dict):
            lines.append(f"{pad}{key}:")
            lines.extend(_render_text(value, indent + 1))
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            lines.append(f"{pad}{key}:")
            for item in value:
                lines.append(f"{pad}  - " + ", ".join(
                    f"{k}={_scalar(v)}" for k, v in item.items()))
        elif isinstance(value, list):
            lines.append(f"{pad}{key}: " + " ".join(str(_scalar(v)) for v in value))
        else:
            lines.append(f"{pad}{key}: {_scalar(value)}")
    return lines


def _scalar(v):
    if isinstance(v, dict) and set(v) == {"num", "den"}:
        return f"{v['num']}/{v['den']}"
    if isinstance(v, bool):
        return "yes" if v else "no"
    return v


def _emit(report: dict, as_json: bool, out=None) -> None:
    out = out or sys.stdout
    if as_json:
        out.write(json.dumps(report, indent=2) + "\n")
    else:
        out.write("\n".join(_render_text(report)) + "\n")


def _load(path: str, *, require_bipartite: bool = True):
    try:
        return read_graph(path, require_bipartite=require_bipartite)
    except (ParseError, NotBipartite) as exc:
        raise CLIError(f"{path}: {exc}", EXIT_INPUT) from None
    except OSError as exc:
        raise CLIError(str(exc), EXIT_INPUT) from None


def _oracle_limit(args) -> int:
    return args.limit if getattr(args, "limit", None) is not None else kdep_limit()


# -- subcommands --------------------------------------------------------------

def cmd_solve(args) -> dict:
    t0 = time.perf_counter()
    g = _load(args.graph)
    t_parse = time.perf_counter() - t0

    provider = None
    if args.matchings:
        try:
            with open(args.matchings, encoding="utf-8") as fh:
                provider = ScriptedProvider(parse_matchings(fh), trusted=False)
        except (ParseError, OSError) as exc:
            raise CLIError(f"{args.matchings}: {exc}", EXIT_MATCHINGS) from None

    t0 = time.perf_counter()
    try:
        solution, trace = solve(g, args.k, provider)
    except InvalidProvider as exc:
        raise CLIError(str(exc), EXIT_MATCHINGS) from None
    t_solve = time.perf_counter() - t0

    removed = trace.removed_count
    report = {
        "command": "solve",
        "graph": args.graph,
        "provider": "scripted" if provider else "hopcroft-karp",
        "n": g.n, "m": g.m, "k": args.k,
        "solution_size": len(solution),
        "matching_sizes": trace.matching_sizes,
        "residual_edge_counts": [r.residual_edge_count for r in trace.iterations],
        "removed_edges": removed,
        "final_cover_size": len(trace.final_cover),
        "feasible": is_k_dependent(g, solution, args.k),
        "lemma1": {
            "holds": check_lemma1(trace),
            "solution_size": len(solution),
            "lower_bound": _frac(Fraction(g.n) - Fraction(removed, args.k)),
        },
        "ratio_bound": _frac(ratio_bound(args.k)),
    }
    t_oracle = None
    if args.with_oracle:
        t0 = time.perf_counter()
        opt = _run_oracle(g, args.k, _oracle_limit(args), force=False)
        t_oracle = time.perf_counter() - t0
        holds, rep = check_lemma2(g, args.k, trace, opt.optimum)
        report["oracle"] = {
            "opt": opt.size,
            "ratio": _frac(Fraction(opt.size, len(solution))) if solution else None,
            "ratio_ok": check_ratio(len(solution), opt.size, args.k),
            "lemma2": holds, "e_prime": rep.e_prime, "e_double_prime": rep.e_double_prime,
            "d_star": rep.d_star,
        }
    if args.print_solution:
        report["solution"] = sorted(solution)
    if args.output:
        Path(args.output).write_text(format_solution(solution), encoding="utf-8")
    timings = {"parse_s": round(t_parse, 6), "solve_s": round(t_solve, 6)}
    if t_oracle is not None:
        timings["oracle_s"] = round(t_oracle, 6)
    report["timings"] = timings
    return report


def _run_oracle(g, k, limit, force):
    if g.n > limit and not force:
        raise CLIError(f"graph has {g.n} vertices, above oracle limit {limit} "
                       "(use --force or --limit)", EXIT_TOO_LARGE)
    try:
        return exact_max_k_dependent(g, k, max(limit, g.n) if force else limit)
    except TooLarge as exc:
        raise CLIError(str(exc), EXIT_TOO_LARGE) from None


def cmd_exact(args) -> dict:
    if args.k < 0:
        raise CLIError("k must be >= 0", EXIT_INPUT)
    g = _load(args.graph, require_bipartite=False)
    if g.n > 64:
        raise CLIError("exact search supports at most 64 vertices", EXIT_TOO_LARGE)
    t0 = time.perf_counter()
    res = _run_oracle(g, args.k, _oracle_limit(args), args.force)
    dt = time.perf_counter() - t0
    if args.output:
        Path(args.output).write_text(format_solution(res.optimum), encoding="utf-8")
    return {
        "command": "exact",
        "graph": args.graph,
        "n": g.n, "m": g.m, "k": args.k,
        "bipartite": g.is_bipartite,
        "opt": res.size,
        "solution": sorted(res.optimum),
        "certified": res.certified,
        "nodes_explored": res.nodes_explored,
        "timings": {"oracle_s": round(dt, 6)},
    }


def cmd_gen_worst(args) -> dict:
    if args.k < 1:
        raise CLIError("k must be >= 1", EXIT_INPUT)
    inst = generate(args.k)
    prefix = args.output or f"worst{args.k}"
    paths = {"graph": f"{prefix}.el", "matchings": f"{prefix}.matchings",
             "metadata": f"{prefix}.meta.json"}
    write_graph(paths["graph"], inst.graph)
    Path(paths["matchings"]).write_text(format_matchings(inst.scripted), encoding="utf-8")
    Path(paths["metadata"]).write_text(metadata_json(inst), encoding="utf-8")
    return {"command": "gen-worst", "k": args.k, "n": inst.graph.n, "m": inst.graph.m,
            "files": paths}


def cmd_gen_random(args) -> dict | None:
    if args.n < 0:
        raise CLIError("n must be >= 0", EXIT_INPUT)
    try:
        if args.edges is not None:
            g = random_bipartite_m(args.n, args.edges, args.seed)
            model = f"n={args.n} m={args.edges} seed={args.seed}"
        else:
            g = random_bipartite(args.n, args.p, args.seed)
            model = f"n={args.n} p={args.p} seed={args.seed}"
    except ValueError as exc:
        raise CLIError(str(exc), EXIT_INPUT) from None
    text = format_edge_list(g, [f"random bipartite {model}"])
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
        return {"command": "gen-random", "n": g.n, "m": g.m, "file": args.output}
    sys.stdout.write(text)
    return None


def _parse_range(text: str) -> list[int]:
    try:
        if ":" in text:
            lo, hi = (int(x) for x in text.split(":"))
            return list(range(lo, hi + 1))
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise CLIError(f"bad k range {text!r}", EXIT_INPUT) from None


def _tight_report(ks: list[int]) -> tuple[dict, bool]:
    if not ks or min(ks) < 1:
        raise CLIError("k values must be >= 1", EXIT_INPUT)
    t0 = time.perf_counter()
    rows, ok = [], True
    for k in ks:
        try:
            rep = tight_sweep([k])[0]
            rows.append({"k": k, "n": rep.n, "m": rep.m, "alg": rep.alg, "opt": rep.opt,
                         "opt_source": rep.opt_source, "ratio": _frac(rep.ratio),
                         "bound": _frac(rep.bound), "equals_bound": rep.equals_bound})
        except TightnessViolation as exc:
            ok = False
            rows.append({"k": k, "error": str(exc)})
    return {"command": "tight", "results": rows, "all_tight": ok,
            "timings": {"total_s": round(time.perf_counter() - t0, 6)}}, ok


def cmd_tight(args) -> dict:
    ks = _parse_range(args.k_range) if args.k_range else [args.k]
    report, ok = _tight_report(ks)
    if not ok:
        _emit(report, args.json)
        raise CLIError("tightness check failed", EXIT_VIOLATION)
    return report


def cmd_verify(args) -> dict:
    if args.tight:
        args.k_range = args.k_range or (str(args.k) if args.k else "1:10")
        return cmd_tight(args)
    ks = _parse_range(args.k) if args.k else [1]
    if min(ks) < 1 or args.trials < 0:
        raise CLIError("need k >= 1 and trials >= 0", EXIT_INPUT)
    max_n = args.max_n
    min_n = min(args.min_n, max_n)
    ps = [float(x) for x in args.p.split(",")] if args.p else list(DEFAULT_PS)
    t0 = time.perf_counter()
    try:
        results = property_sweep(args.trials, args.seed, ks, min_n, max_n, ps, jobs=args.jobs)
    except (ValueError, TooLarge) as exc:
        raise CLIError(str(exc), EXIT_INPUT) from None
    failures = [r for r in results if not r.ok]
    report = {
        "command": "verify",
        "seed": args.seed, "trials": args.trials, "k": ks,
        "n_range": [min_n, max_n], "p": ps,
        "passed": len(results) - len(failures),
        "failed": len(failures),
        "checks": {
            "feasible": sum(r.feasible for r in results),
            "lemma1": sum(r.lemma1 for r in results),
            "lemma2": sum(r.lemma2 for r in results),
            "ratio": sum(r.ratio_ok for r in results),
        },
        "worst_ratio": _frac(max((Fraction(r.opt, r.alg) for r in results if r.alg),
                                 default=Fraction(1))),
    }
    if failures:
        outdir = Path(args.reproducer_dir)
        outdir.mkdir(parents=True, exist_ok=True)
        files = []
        for r in failures:
            path = outdir / f"violation_seed{args.seed}_trial{r.index}.el"
            write_graph(path, random_bipartite(r.n, r.p, r.graph_seed), [
                f"verify seed={args.seed} trial={r.index} k={r.k} n={r.n} p={r.p} "
                f"graph_seed={r.graph_seed}",
                json.dumps(r.as_dict()),
            ])
            files.append(str(path))
        report["failures"] = [r.as_dict() for r in failures]
        report["reproducers"] = files
        report["timings"] = {"total_s": round(time.perf_counter() - t0, 6)}
        _emit(report, args.json)
        raise CLIError(f"{len(failures)} trial(s) violated a checked property", EXIT_VIOLATION)
    report["timings"] = {"total_s": round(time.perf_counter() - t0, 6)}
    return report


# -- argument parsing ---------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kdepset",
        description="Maximum k-dependent set on bipartite graphs.")
    parser.add_argument("--backend", choices=["python", "cython"],
                        help="force a kernel backend (default: compiled if available)")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--json", action="store_true", help="machine-readable report")

    p = sub.add_parser("solve", help="run the matching-removal approximation")
    p.add_argument("graph")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--matchings", help="scripted matchings sidecar file")
    p.add_argument("--with-oracle", action="store_true",
                   help="also compute the exact optimum and check the bounds")
    p.add_argument("--limit", type=int, help="oracle vertex limit")
    p.add_argument("-o", "--output", help="write the solution (one id per line)")
    p.add_argument("--print-solution", action="store_true")
    common(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("exact", help="exact maximum k-dependent set (small graphs)")
    p.add_argument("graph")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--limit", type=int, help="vertex limit (default $KDEPSET_ORACLE_LIMIT or 22)")
    p.add_argument("--force", action="store_true", help="ignore the vertex limit")
    p.add_argument("-o", "--output")
    common(p)
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("gen-worst", help="write the tight instance for k")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("-o", "--output", help="file prefix (default worst<K>)")
    common(p)
    p.set_defaults(func=cmd_gen_worst)

    p = sub.add_parser("gen-random", help="write a seeded random bipartite graph")
    p.add_argument("-n", type=int, required=True)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("-p", type=float, help="edge probability")
    group.add_argument("-m", "--edges", type=int, help="exact edge count")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output")
    common(p)
    p.set_defaults(func=cmd_gen_random)

    p = sub.add_parser("verify", help="seeded property sweep against the oracle")
    p.add_argument("-k", help="k value(s): 3, 1,2,3 or 1:3")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--min-n", type=int, default=6)
    p.add_argument("--max-n", type=int, default=14)
    p.add_argument("--p", help="comma-separated edge probabilities")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--reproducer-dir", default=".")
    p.add_argument("--tight", action="store_true", help="check the worst-case family instead")
    p.add_argument("--k-range", help="with --tight: A:B")
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("tight", help="confirm the ratio bound is attained on the worst case")
    p.add_argument("-k", type=int, default=1)
    p.add_argument("--k-range", help="A:B or comma list")
    common(p)
    p.set_defaults(func=cmd_tight)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.backend:
        if args.backend not in _backend.available_backends():
            print(f"kdepset: backend {args.backend!r} is not built", file=sys.stderr)
            return EXIT_INPUT
        _backend.use(args.backend)
    try:
        report = args.func(args)
    except CLIError as exc:
        print(f"kdepset {args.command}: {exc}", file=sys.stderr)
        return exc.code
    except InvalidK as exc:
        print(f"kdepset {args.command}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if report is not None:
        _emit(report, args.json)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
