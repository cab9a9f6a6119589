"""The densek command line tool.

Subcommands: solve (run the approximation suite), oracle (exact optimum on
small instances), gen (write instance families to disk), bench (run the
whole suite over a corpus directory into CSV).

Exit codes, one per error class:
  0 success          2 usage (argparse)   3 malformed instance file
  4 invalid value    5 weighted/unweighted mismatch
  6 oracle size guard exceeded             7 file system error
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from fractions import Fraction
from pathlib import Path

from .algorithms import run_named_algorithm
from .generators import (
    example1a,
    example1b,
    gnp,
    load_sidecar,
    planted,
    save_instance,
)
from .graph import EdgeListError, Graph, load_edge_list
from .oracle import OracleLimitError, brute_k

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_PARSE = 3
EXIT_VALUE = 4
EXIT_MISMATCH = 5
EXIT_ORACLE = 6
EXIT_IO = 7

_UNWEIGHTED_ONLY = ("alg1", "alg3", "alg4", "hub")
_ALL_NAMES = _UNWEIGHTED_ONLY + ("wgreedy",)


class AlgorithmMismatchError(ValueError):
    """A weighted instance was paired with an unweighted-only algorithm."""


def _density_json(value: Fraction) -> dict:
    return {
        "num": value.numerator,
        "den": value.denominator,
        "decimal": float(value),
    }


def _entry(solution, elapsed_ms: float) -> dict:
    return {
        "algorithm": solution.algorithm,
        "k": solution.k,
        "vertices": list(solution.vertices),
        "density": _density_json(solution.density),
        "elapsed_ms": round(elapsed_ms, 3),
    }


def _timed_run(g: Graph, k: int, name: str) -> dict:
    start = time.perf_counter()
    solution = run_named_algorithm(g, k, name)
    return _entry(solution, (time.perf_counter() - start) * 1000.0)


def _entry_density(entry: dict) -> Fraction:
    return Fraction(entry["density"]["num"], entry["density"]["den"])


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")
    else:
        Path(out).write_text(text if text.endswith("\n") else text + "\n")


def _load_instance(path: str) -> Graph:
    return load_edge_list(path)


def _solve_entries(g: Graph, k: int, algo: str) -> list[dict]:
    if algo == "auto":
        names = ["wgreedy"] if g.weighted else list(_UNWEIGHTED_ONLY)
    else:
        if g.weighted and algo in _UNWEIGHTED_ONLY:
            raise AlgorithmMismatchError(
                f"{algo} needs an unweighted instance; this file is weighted "
                f"(use --algo wgreedy or --algo auto)"
            )
        names = [algo]
    return [_timed_run(g, k, name) for name in names]


def _report_csv(entries: list[dict], g: Graph) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer)
    writer.writerow(
        ["algorithm", "k", "n", "m", "density_num", "density_den", "density",
         "elapsed_ms", "vertices"]
    )
    for entry in entries:
        dens = _entry_density(entry)
        writer.writerow(
            [entry["algorithm"], entry["k"], g.n, g.m,
             dens.numerator, dens.denominator, float(dens),
             entry["elapsed_ms"], " ".join(map(str, entry["vertices"]))]
        )
    return buffer.getvalue()


def cmd_solve(args) -> int:
    g = _load_instance(args.input)
    if not 3 <= args.k <= g.n:
        raise ValueError(f"k={args.k} out of range 3..{g.n}")
    entries = _solve_entries(g, args.k, args.algo)
    best = entries[0]
    for entry in entries[1:]:
        if _entry_density(entry) > _entry_density(best):
            best = entry
    report = {
        "instance": {
            "path": args.input,
            "n": g.n,
            "m": g.m,
            "weighted": g.weighted,
        },
        "k": args.k,
        "algo": args.algo,
        "entries": entries,
        "best": best,
    }
    if args.oracle:
        exact = brute_k(g, args.k, connected=True, limit=args.oracle_limit)
        report["oracle"] = {
            "vertices": list(exact.best_set),
            "density": _density_json(exact.best_density),
            "connected": True,
        }
        best_density = _entry_density(best)
        if best_density > 0:
            report["ratio"] = _density_json(exact.best_density / best_density)
        else:
            report["ratio"] = None
    if args.format == "csv":
        _emit(_report_csv(entries, g), args.out)
    else:
        _emit(json.dumps(report, indent=2), args.out)
    return EXIT_OK


def cmd_oracle(args) -> int:
    g = _load_instance(args.input)
    exact = brute_k(g, args.k, connected=args.connected, limit=args.oracle_limit)
    report = {
        "instance": {
            "path": args.input,
            "n": g.n,
            "m": g.m,
            "weighted": g.weighted,
        },
        "k": args.k,
        "connected": args.connected,
        "vertices": list(exact.best_set),
        "density": _density_json(exact.best_density),
    }
    _emit(json.dumps(report, indent=2), args.out)
    return EXIT_OK


def _require(args, names: list[str], family: str) -> None:
    missing = [n for n in names if getattr(args, n.replace("-", "_")) is None]
    if missing:
        raise ValueError(
            f"family {family} needs {', '.join('--' + n for n in missing)}"
        )


def cmd_gen(args) -> int:
    out = Path(args.out)
    if args.family == "example1a":
        _require(args, ["ell"], args.family)
        instance = example1a(args.ell)
        sidecar = instance.save(out)
        g = instance.graph
    elif args.family == "example1b":
        _require(args, ["ell"], args.family)
        instance = example1b(args.ell)
        sidecar = instance.save(out)
        g = instance.graph
    elif args.family == "gnp":
        _require(args, ["n", "p"], args.family)
        g = gnp(args.n, args.p, args.seed)
        sidecar = save_instance(
            g,
            out,
            family="GNP",
            params={
                "requested_n": args.n,
                "p": args.p,
                "seed": args.seed,
                "truncated": g.n != args.n,
            },
        )
    else:  # planted
        _require(args, ["n", "k", "p-in", "p-out"], args.family)
        instance = planted(args.n, args.k, args.p_in, args.p_out, args.seed)
        sidecar = instance.save(out)
        g = instance.graph
    print(f"wrote {out} (n={g.n}, m={g.m}) with sidecar {sidecar}")
    return EXIT_OK


def _bench_ks(args, sidecar: dict | None) -> list[int]:
    if args.k is not None:
        return [int(part) for part in str(args.k).split(",") if part]
    if sidecar is not None and sidecar.get("k") is not None:
        return [int(sidecar["k"])]
    raise ValueError(
        "no k for instance: pass --k or generate instances with a sidecar k"
    )


def cmd_bench(args) -> int:
    corpus = Path(args.corpus)
    if not corpus.is_dir():
        raise FileNotFoundError(f"corpus directory not found: {corpus}")
    files = sorted(corpus.glob("*.edges"))
    if not files:
        raise ValueError(f"corpus {corpus} holds no *.edges instances")
    rows = []
    for path in files:
        g = load_edge_list(path)
        sidecar = load_sidecar(path)
        known_opt = None
        if sidecar is not None and sidecar.get("known_opt_num") is not None:
            known_opt = Fraction(
                sidecar["known_opt_num"], sidecar["known_opt_den"]
            )
        family = sidecar.get("family", "") if sidecar else ""
        names = ["wgreedy"] if g.weighted else list(_ALL_NAMES)
        for k in _bench_ks(args, sidecar):
            for name in names:
                entry = _timed_run(g, k, name)
                dens = _entry_density(entry)
                ratio = ""
                if known_opt is not None and dens > 0:
                    ratio = float(known_opt / dens)
                rows.append(
                    [path.name, family, entry["algorithm"], k, g.n, g.m,
                     dens.numerator, dens.denominator, float(dens),
                     ratio, entry["elapsed_ms"]]
                )
    buffer = io.StringIO()
    writer = csv.writer(buffer)
    writer.writerow(
        ["instance", "family", "algorithm", "k", "n", "m", "density_num",
         "density_den", "density", "ratio_vs_known", "elapsed_ms"]
    )
    writer.writerows(rows)
    Path(args.out).write_text(buffer.getvalue())
    print(f"wrote {len(rows)} rows to {args.out}")
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="densek",
        description="Find connected k-vertex subgraphs of high density.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    solve = sub.add_parser("solve", help="run the approximation suite")
    solve.add_argument("--input", required=True, help="edge-list instance file")
    solve.add_argument("--k", type=int, required=True, help="subgraph size, 3..n")
    solve.add_argument(
        "--algo",
        choices=("auto",) + _ALL_NAMES,
        default="auto",
        help="one algorithm, or auto for every applicable one",
    )
    solve.add_argument("--format", choices=("json", "csv"), default="json")
    solve.add_argument(
        "--oracle",
        action="store_true",
        help="also compute the exact optimum and the achieved ratio",
    )
    solve.add_argument("--oracle-limit", type=int, default=None)
    solve.add_argument("--out", default=None, help="write report here, not stdout")
    solve.set_defaults(func=cmd_solve)

    oracle = sub.add_parser("oracle", help="exact optimum by enumeration")
    oracle.add_argument("--input", required=True)
    oracle.add_argument("--k", type=int, required=True)
    oracle.add_argument(
        "--connected",
        action=argparse.BooleanOptionalAction,
        default=True,
        help="require the optimum to be connected (default yes)",
    )
    oracle.add_argument("--oracle-limit", type=int, default=None)
    oracle.add_argument("--out", default=None)
    oracle.set_defaults(func=cmd_oracle)

    gen = sub.add_parser("gen", help="write an instance file plus JSON sidecar")
    gen.add_argument(
        "family", choices=("example1a", "example1b", "gnp", "planted")
    )
    gen.add_argument("--ell", type=int, default=None, help="family scale, >= 2")
    gen.add_argument("--n", type=int, default=None)
    gen.add_argument("--p", type=float, default=None)
    gen.add_argument("--k", type=int, default=None)
    gen.add_argument("--p-in", type=float, default=None, dest="p_in")
    gen.add_argument("--p-out", type=float, default=None, dest="p_out")
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--out", required=True)
    gen.set_defaults(func=cmd_gen)

    bench = sub.add_parser("bench", help="run the suite over a corpus into CSV")
    bench.add_argument("--corpus", required=True, help="directory of *.edges files")
    bench.add_argument(
        "--k", default=None, help="comma-separated k values; default sidecar k"
    )
    bench.add_argument("--out", required=True, help="CSV output path")
    bench.set_defaults(func=cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except EdgeListError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except AlgorithmMismatchError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except OracleLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ORACLE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALUE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
