"""Command line entry point: ``mixedsums {eval,max,witness,plot,random}``.

Exit codes: 0 success, 2 usage or validation error, 3 runtime failure
(empty prescription set, grid over the memory cap).
"""

from __future__ import annotations

import argparse
import csv
import math
import shlex
import sys
from pathlib import Path

from .charcore import DirichletCharacter, ModulusError, build_modulus, legendre
from .experiments import (
    MAX_COLUMNS,
    RANDOM_COLUMNS,
    WITNESS_COLUMNS,
    max_row,
    parse_alpha_beta,
    random_rows,
    select_characters,
    select_primes,
    standard_witness_rows,
    to_csv,
    witness_row,
)
from .maxsearch import DEFAULT_EPS
from .prescribe import PrescriptionError
from .randmodels import KINDS
from .sums import GridTooLarge, SumSpec, direct_sum, direct_sum_at


class UsageError(Exception):
    pass


def read_config(path) -> dict:
    """key=value lines; '#' starts a comment; keys use the long flag names."""
    out = {}
    for ln, line in enumerate(Path(path).read_text().splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise UsageError(f"{path}:{ln}: expected key=value")
        k, v = (x.strip() for x in line.split("=", 1))
        out[k.replace("-", "_")] = v
    return out


def _character(args) -> DirichletCharacter:
    mod = build_modulus(args.p)
    if args.legendre:
        return legendre(mod)
    if args.char is None:
        raise UsageError("choose a character with --legendre or --char INDEX")
    chi = DirichletCharacter(mod, args.char)
    if chi.is_principal:
        raise UsageError("the principal character is excluded")
    return chi


def _emit(text: str, out):
    if out:
        Path(out).parent.mkdir(parents=True, exist_ok=True)
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _invocation(argv) -> str:
    return "mixedsums " + " ".join(shlex.quote(a) for a in argv)


def cmd_eval(args, argv):
    if not args.beta > args.alpha >= 0:
        raise UsageError(f"need beta > alpha >= 0, got alpha={args.alpha}, beta={args.beta}")
    s = SumSpec(_character(args), args.alpha, args.beta)
    if args.theta is not None:
        z = direct_sum(s, args.theta)
    elif args.k is not None and args.t is not None:
        z = direct_sum_at(s, args.k, args.t)
    else:
        raise UsageError("give --theta, or both --k and --t")
    print(f"{z.real:.9g}{z.imag:+.9g}j")


def cmd_max(args, argv):
    if not args.beta > args.alpha >= 0:
        raise UsageError(f"need beta > alpha >= 0, got alpha={args.alpha}, beta={args.beta}")
    rows = []
    for p in select_primes(args.p, args.per_decade, args.seed):
        for chi in select_characters(build_modulus(p), args.chars, args.seed):
            rows.append(max_row(chi, args.alpha, args.beta, args.eps))
    _emit(to_csv(rows, MAX_COLUMNS, _invocation(argv)), args.out)


def cmd_witness(args, argv):
    if args.standard:
        rows = standard_witness_rows()
    else:
        pairs = parse_alpha_beta(args.alpha_beta)
        rows = []
        for p in select_primes(args.p, args.per_decade, args.seed):
            for chi in select_characters(build_modulus(p), args.chars, args.seed):
                for a, b in pairs:
                    rows.append(witness_row(chi, a, b))
    failed = sum(1 for r in rows if r["error"])
    if failed:
        print(f"warning: {failed} of {len(rows)} rows failed (see 'error' column)", file=sys.stderr)
    _emit(to_csv(rows, WITNESS_COLUMNS, _invocation(argv)), args.out)


def _read_csv(path):
    lines = [ln for ln in Path(path).read_text().splitlines() if ln.strip() and not ln.startswith("#")]
    if len(lines) < 2:
        raise UsageError(f"{path}: no data rows")
    return list(csv.DictReader(lines))


def cmd_plot(args, argv):
    rows = _read_csv(args.csv)
    for col in (args.x, args.y):
        if col not in rows[0]:
            raise UsageError(f"column {col!r} not in {args.csv} (have {', '.join(rows[0])})")
    pts = []
    for r in rows:
        try:
            pts.append((float(r[args.x]), float(r[args.y])))
        except ValueError:
            continue  # failed rows carry empty fields
    if not pts:
        raise UsageError("no numeric points to plot")
    pts.sort()
    import matplotlib

    matplotlib.use("svg")
    import matplotlib.pyplot as plt

    plt.rcParams["svg.hashsalt"] = "mixedsums"
    fig, ax = plt.subplots(figsize=(6, 4))
    xs, ys = zip(*pts)
    ax.plot(xs, ys, "o-", ms=4, lw=0.8)
    if args.logx:
        ax.set_xscale("log")
    ax.set_xlabel(args.x)
    ax.set_ylabel(args.y)
    ax.grid(alpha=0.3)
    fig.tight_layout()
    Path(args.out).parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(args.out, format="svg", metadata={"Date": None})
    plt.close(fig)


def cmd_random(args, argv):
    if args.N < 1 or args.trials < 1:
        raise UsageError("need N >= 1 and trials >= 1")
    rows = random_rows(args.kind, args.N, args.trials, args.seed, args.eps)
    _emit(to_csv(rows, RANDOM_COLUMNS, _invocation(argv)), args.out)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="mixedsums", description=__doc__.splitlines()[0])
    ap.add_argument("--config", help="key=value file; explicit flags override it")
    sub = ap.add_subparsers(dest="command", required=True)

    def char_flags(sp):
        sp.add_argument("--p", type=int, required=True)
        sp.add_argument("--legendre", action="store_true")
        sp.add_argument("--char", type=int, help="character index c against the smallest primitive root")

    e = sub.add_parser("eval", help="print F(theta) or F((k+t)/p)")
    char_flags(e)
    e.add_argument("--alpha", type=float, default=0.0)
    e.add_argument("--beta", type=float, default=1.0)
    e.add_argument("--theta", type=float)
    e.add_argument("--k", type=int)
    e.add_argument("--t", type=float)
    e.set_defaults(func=cmd_eval)

    def sweep_flags(sp):
        sp.add_argument("--p", default="499", help="'499,1009' or a range 'lo:hi'")
        sp.add_argument("--per-decade", type=int, help="with a range, sample this many primes per decade")
        sp.add_argument("--chars", default="legendre", help="all | legendre | sample-N | order-D")
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--out", help="output path (default stdout)")

    m = sub.add_parser("max", help="certified max |F| per character, as CSV")
    sweep_flags(m)
    m.add_argument("--alpha", type=float, default=0.0)
    m.add_argument("--beta", type=float, default=1.0)
    m.add_argument("--eps", type=float, default=DEFAULT_EPS)
    m.set_defaults(func=cmd_max)

    w = sub.add_parser("witness", help="lower-bound witnesses, as CSV")
    sweep_flags(w)
    w.add_argument("--alpha-beta", default="0:1", help="comma-separated alpha:beta pairs")
    w.add_argument("--standard", action="store_true", help="run the standard sweep and ignore --p/--chars")
    w.set_defaults(func=cmd_witness)

    pl = sub.add_parser("plot", help="SVG plot of two CSV columns")
    pl.add_argument("--csv", required=True)
    pl.add_argument("--x", required=True)
    pl.add_argument("--y", required=True)
    pl.add_argument("--out", required=True)
    pl.add_argument("--logx", action="store_true")
    pl.set_defaults(func=cmd_plot)

    r = sub.add_parser("random", help="max statistics of random polynomials, as CSV")
    r.add_argument("--kind", choices=KINDS, default="rademacher-iid")
    r.add_argument("--N", type=int, default=4096)
    r.add_argument("--trials", type=int, default=50)
    r.add_argument("--seed", type=int, default=0)
    r.add_argument("--eps", type=float, default=DEFAULT_EPS)
    r.add_argument("--out")
    r.set_defaults(func=cmd_random)
    return ap


def _apply_config(ap, argv):
    pre = argparse.ArgumentParser(add_help=False)
    pre.add_argument("--config")
    known, rest = pre.parse_known_args(argv)
    if not known.config:
        return
    cfg = read_config(known.config)
    choices = ap._subparsers._group_actions[0].choices
    command = next((a for a in rest if a in choices), None)
    if command is None:
        return  # argparse reports the missing command
    # defaults live on the subparser; keys it does not know are ignored
    sp = choices[command]
    dests = {a.dest: a for a in sp._actions}
    vals = {}
    for k, v in cfg.items():
        if k not in dests:
            continue
        a = dests[k]
        if a.const is True:  # store_true flags
            vals[k] = v.lower() in ("1", "true", "yes", "on")
            continue
        try:
            vals[k] = a.type(v) if a.type else v
        except ValueError:
            raise UsageError(f"{known.config}: bad value for {k}: {v!r}") from None
        if a.choices and vals[k] not in a.choices:
            raise UsageError(f"{known.config}: {k} must be one of {', '.join(a.choices)}")
        a.required = False
    sp.set_defaults(**vals)


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    ap = build_parser()
    try:
        _apply_config(ap, argv)
        args = ap.parse_args(argv)
    except UsageError as ex:
        print(f"mixedsums: error: {ex}", file=sys.stderr)
        return 2
    except SystemExit as ex:
        return int(ex.code or 0)
    try:
        args.func(args, argv)
    except (UsageError, ModulusError, ValueError) as ex:
        print(f"mixedsums: error: {ex}", file=sys.stderr)
        return 2
    except (PrescriptionError, GridTooLarge, MemoryError) as ex:
        print(f"mixedsums: runtime error: {ex}", file=sys.stderr)
        return 3
    return 0


if __name__ == "__main__":
    sys.exit(main())
