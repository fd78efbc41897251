"""Command-line front end.

Function lines use the hex format ``n=<n>:<hex>``; symmetric functions use
``λ=<bits>`` with λ_0 first.  Lines starting with ``#`` carry metadata and
are passed through or skipped by readers.

Exit codes: 0 success, 1 verification failure, 2 usage or input error.
"""

import argparse
import contextlib
import csv
import json
import math
import os
import secrets
import sys

import numpy as np

from .coincident import random_coincident
from .core import N_MAX, BooleanFunction, DimensionError, check_n
from .estimators import FEATURES, BooleanFunctionFeatures
from .experiments import POPULATIONS, balanced_probability, ci_table, histogram, run_distribution
from .metrics import WALSH_N_MAX
from .mobius import transform
from .symmetric import enumerate_coincident_symmetric, random_coincident_symmetric
from .verify import run_verify


class UsageError(Exception):
    pass


def _out(args):
    if args.output:
        return open(args.output, "w", newline="")
    return contextlib.nullcontext(sys.stdout)


def _read_lines(path):
    if path in (None, "-"):
        return sys.stdin.read().splitlines()
    with open(path) as fh:
        return fh.read().splitlines()


def _parse_functions(lines):
    """Yield (line, function) pairs; comment and blank lines give None."""
    for number, line in enumerate(lines, 1):
        text = line.strip()
        if not text or text.startswith("#"):
            yield line, None
            continue
        try:
            yield line, BooleanFunction.from_hex(text)
        except ValueError as exc:
            raise UsageError(f"line {number}: {exc}") from None


def _seed(args):
    if args.seed is None:
        args.seed = secrets.randbits(63)
    return args.seed


# ---------------------------------------------------------------------------


def cmd_gen(args):
    n = check_n(args.n, high=64 if args.kind == "coincident-symmetric" else N_MAX)
    if args.count < 1:
        raise UsageError("--count must be at least 1")
    seed = _seed(args)
    rng = np.random.default_rng(seed)
    with _out(args) as out:
        out.write(f"# gen kind={args.kind} n={n} count={args.count} seed={seed}\n")
        for _ in range(args.count):
            if args.kind == "uniform":
                out.write(BooleanFunction.random(n, rng).to_hex() + "\n")
            elif args.kind == "coincident":
                out.write(random_coincident(n, rng).to_hex() + "\n")
            else:
                out.write(str(random_coincident_symmetric(n, rng)) + "\n")
    return 0


def cmd_mobius(args):
    lines = []
    for line, f in _parse_functions(_read_lines(args.input)):
        lines.append(line if f is None else transform(f).to_hex())
    with _out(args) as out:
        out.write("".join(line + "\n" for line in lines))
    return 0


def _cell(value):
    if isinstance(value, float) and math.isinf(value):
        return "-inf"
    return int(value)


def analyze_rows(functions, metrics):
    rows = []
    for f in functions:
        needs_walsh = {"nl", "ci1"} & set(metrics)
        if needs_walsh and f.n > WALSH_N_MAX:
            raise UsageError(f"metrics {sorted(needs_walsh)} need n <= {WALSH_N_MAX}, got n={f.n}")
        feats = BooleanFunctionFeatures(metrics=metrics).fit([f]).transform([f])[0]
        row = {"function": f.to_hex()}
        for name, value in zip(metrics, feats):
            cell = _cell(float(value))
            if name in ("balanced", "ci1", "coincident", "monotonic"):
                cell = bool(cell)
            row[name] = cell
        rows.append(row)
    return rows


def cmd_analyze(args):
    metrics = tuple(m.strip() for m in args.metrics.split(",") if m.strip())
    unknown = set(metrics) - set(FEATURES)
    if not metrics or unknown:
        raise UsageError(f"metrics must be a subset of {','.join(FEATURES)}")
    functions = [f for _, f in _parse_functions(_read_lines(args.input)) if f is not None]
    rows = analyze_rows(functions, metrics)
    with _out(args) as out:
        if args.json:
            json.dump(rows, out, ensure_ascii=False, indent=1)
            out.write("\n")
        else:
            writer = csv.writer(out, lineterminator="\n")
            writer.writerow(("function",) + metrics)
            for row in rows:
                writer.writerow([row["function"]] + [_csv_value(row[m]) for m in metrics])
    return 0


def _csv_value(value):
    if isinstance(value, bool):
        return "true" if value else "false"
    return value


def cmd_ci_table(args):
    if not 1 <= args.n_max <= 5:
        raise UsageError("--n-max must be between 1 and 5")
    progress = None
    if args.long and args.n_max == 5:
        from tqdm import tqdm

        progress = tqdm(desc="cor_1(5)", unit="chunk", file=sys.stderr)
    rows = ci_table(args.n_max, long=args.long, checkpoint=args.checkpoint, progress=progress)
    if progress is not None:
        progress.close()
    with _out(args) as out:
        if args.json:
            payload = [
                {"n": r.n, "total": r.total, "cor1": r.cor1, "weights": {str(w): c for w, c in r.profile.items()}}
                for r in rows
            ]
            json.dump(payload, out, indent=1)
            out.write("\n")
        elif args.text:
            out.write(format_ci_table(rows))
        else:
            writer = csv.writer(out, lineterminator="\n")
            writer.writerow(("n", "total", "cor1", "weight_profile"))
            for r in rows:
                profile = ";".join(f"{w}:{c}" for w, c in r.profile.items())
                writer.writerow((r.n, r.total, "" if r.cor1 is None else r.cor1, profile))
    return 0


def format_ci_table(rows):
    weights = sorted({w for r in rows for w in r.profile})
    header = ["n\\m"] + [str(w) for w in weights] + ["Total", "cor_1(n)"]
    body = []
    for r in rows:
        cells = [str(r.n)] + [str(r.profile.get(w, "")) for w in weights]
        cells += [str(r.total), "" if r.cor1 is None else str(r.cor1)]
        body.append(cells)
    widths = [max(len(row[i]) for row in [header] + body) for i in range(len(header))]
    lines = [" | ".join(c.rjust(w) for c, w in zip(row, widths)) for row in [header] + body]
    lines.insert(1, "-+-".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"


def cmd_dist(args):
    n = check_n(args.n)
    if args.samples < 1:
        raise UsageError("--samples must be at least 1")
    if args.kind == "nl" and n > WALSH_N_MAX:
        raise UsageError(f"nl needs n <= {WALSH_N_MAX}")
    populations = POPULATIONS if args.population == "both" else (args.population,)
    seed = _seed(args)
    report = run_distribution(args.kind, populations, n, args.samples, seed, jobs=args.jobs)
    with _out(args) as out:
        out.write(f"# dist kind={args.kind} n={n} samples={args.samples} seed={seed}\n")
        if report.ks is not None:
            out.write(f"# ks statistic={report.ks[0]:.6f} pvalue={report.ks[1]:.6f}\n")
        writer = csv.writer(out, lineterminator="\n")
        if args.kind == "weight":
            mean = 1 << (n - 1)
            normalized = {p: v / mean for p, v in report.values.items()}
            pooled = np.concatenate(list(normalized.values()))
            bounds = (float(pooled.min()), float(pooled.max()) + 1e-12)
            writer.writerow(("population", "bin_left", "bin_right", "count"))
            for p in populations:
                for left, right, count in histogram(normalized[p], bins=args.bins, value_range=bounds):
                    writer.writerow((p, f"{left:.6f}", f"{right:.6f}", count))
        elif args.kind == "nl":
            pooled = np.concatenate(list(report.values.values()))
            bounds = (int(pooled.min()), int(pooled.max()))
            writer.writerow(("population", "nonlinearity", "count"))
            for p in populations:
                for value, _, count in histogram(report.values[p], value_range=bounds):
                    writer.writerow((p, value, count))
        elif args.kind == "degree":
            writer.writerow(("population", "degree", "mean_monomials", "expected_uniform"))
            for p in populations:
                means = report.values[p].mean(axis=0)
                for d in range(n + 1):
                    writer.writerow((p, d, f"{means[d]:.4f}", f"{math.comb(n, d) / 2:.1f}"))
        else:
            writer.writerow(("population", "balanced", "samples", "expected_uniform"))
            for p in populations:
                writer.writerow((p, int(report.values[p].sum()), args.samples, f"{balanced_probability(n):.6g}"))
    return 0


def cmd_enum_cs(args):
    n = check_n(args.n, high=64)
    count = 0
    with _out(args) as out:
        for lam in enumerate_coincident_symmetric(n):
            out.write(str(lam) + "\n")
            count += 1
        out.write(f"# count={count}\n")
    return 0


def cmd_verify(args):
    results = run_verify(args.level, seed=0 if args.seed is None else args.seed)
    with _out(args) as out:
        for r in results:
            status = "PASS" if r.passed else "FAIL"
            detail = f" ({r.detail})" if r.detail else ""
            out.write(f"{status} {r.name}: {r.statement} [{r.seconds:.2f}s]{detail}\n")
        failed = sum(not r.passed for r in results)
        out.write(f"# {len(results) - failed}/{len(results)} checks passed\n")
    return 1 if failed else 0


# ---------------------------------------------------------------------------


def _common():
    common = argparse.ArgumentParser(add_help=False, argument_default=argparse.SUPPRESS)
    common.add_argument("--seed", type=int, help="seed for every random stream")
    common.add_argument("--jobs", type=int, help="worker processes for sampling loops")
    common.add_argument("--json", action="store_true", help="JSON instead of CSV where supported")
    common.add_argument("--long", action="store_true", help="enable multi-minute computations")
    common.add_argument("--output", help="write to this path instead of stdout")
    return common


def build_parser():
    common = _common()
    parser = argparse.ArgumentParser(prog="mobiuslab", description=__doc__.splitlines()[0], parents=[common])
    parser.set_defaults(seed=None, jobs=os.cpu_count() or 1, json=False, long=False, output=None)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", parents=[common], help="generate random functions")
    p.add_argument("kind", choices=("uniform", "coincident", "coincident-symmetric"))
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--count", type=int, default=1)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("mobius", parents=[common], help="Möbius transform of each input line")
    p.add_argument("input", nargs="?", default="-")
    p.set_defaults(func=cmd_mobius)

    p = sub.add_parser("analyze", parents=[common], help="measure each input function")
    p.add_argument("input", nargs="?", default="-")
    p.add_argument("--metrics", default=",".join(FEATURES))
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("ci-table", parents=[common], help="correlation-immune coincident functions by weight")
    p.add_argument("--n-max", type=int, default=5)
    p.add_argument("--checkpoint", default=None, help="resume file for the n=5 exhaustive count")
    p.add_argument("--text", action="store_true", help="aligned text table instead of CSV")
    p.set_defaults(func=cmd_ci_table)

    p = sub.add_parser("dist", parents=[common], help="metric distributions over random populations")
    p.add_argument("kind", choices=("weight", "degree", "nl", "balanced"))
    p.add_argument("--population", choices=POPULATIONS + ("both",), default="both")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--bins", type=int, default=64)
    p.set_defaults(func=cmd_dist)

    p = sub.add_parser("enum-cs", parents=[common], help="list coincident symmetric functions")
    p.add_argument("-n", type=int, required=True)
    p.set_defaults(func=cmd_enum_cs)

    p = sub.add_parser("verify", parents=[common], help="run the invariant checks")
    p.add_argument("--level", choices=("quick", "full"), default="quick")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, DimensionError) as exc:
        print(f"mobiuslab {args.command}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
