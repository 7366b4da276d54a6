"""Command-line front end.

Verbs: theory, sweep, analyze, fit, generate, compare. Exit status is 0
on success, 1 on a usage error and 2 on a data error.
"""
from __future__ import annotations

import argparse
import configparser
import csv
import io
import json
import math
import os
import sys

from . import analysis, figures
from .errors import (
    ConsistencyError,
    DomainError,
    InfeasibleError,
    NoBracketError,
    NoValidPairError,
    ParseError,
    UnidentifiableError,
)
from .fit import FitConfig, fit
from .ingest import clean, degree_sequence, read_edge_list, summarize, write_edge_list
from .metrics import param_range, sweep
from .powerlaw import BoundedPowerLaw
from .synth import configuration_model, make_rng, sample_degrees

EXIT_OK, EXIT_USAGE, EXIT_DATA = 0, 1, 2
DATA_ERRORS = (
    OSError,
    ParseError,
    ConsistencyError,
    UnidentifiableError,
    NoBracketError,
    NoValidPairError,
    InfeasibleError,
)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


# -- config file --------------------------------------------------------------

# keys accepted in a config file and the argparse destination they set
CONFIG_KEYS = {
    "lambda": ("lam", float),
    "kmin": ("kmin", int),
    "kmax": ("kmax", int),
    "n": ("n", int),
    "seed": ("seed", int),
    "format": ("format", str),
    "targets": ("targets", str),
    "use_n_as_kmax": ("use_n_as_kmax", "bool"),
    "fit_strategy": ("fit_strategy", str),
    "out": ("out", str),
    "inputs": ("inputs", "list"),
    "preset": ("preset", str),
    "metric": ("metric", str),
    "vary": ("vary", str),
    "range": ("range", str),
    "fit_decay": ("fit_decay", "bool"),
    "window": ("window", str),
    "xtol": ("xtol", float),
    "bracket": ("bracket", str),
}


def load_config(path) -> dict:
    """Read ``key = value`` lines (``#`` comments) into argparse destinations."""
    parser = configparser.ConfigParser(inline_comment_prefixes=("#",))
    with open(path, encoding="utf-8") as fh:
        parser.read_string("[run]\n" + fh.read(), source=os.fspath(path))
    out = {}
    for key, raw in parser["run"].items():
        norm = key.replace("-", "_")
        if norm not in CONFIG_KEYS:
            raise UsageError(f"{path}: unknown config key {key!r}")
        dest, kind = CONFIG_KEYS[norm]
        try:
            if kind == "bool":
                value = parser["run"].getboolean(key)
            elif kind == "list":
                value = raw.split()
            else:
                value = kind(raw)
        except ValueError as exc:
            raise UsageError(f"{path}: bad value for {key}: {exc}") from None
        out[dest] = value
    return out


# -- output -------------------------------------------------------------------

def _fmt(value):
    if isinstance(value, float):
        if math.isnan(value):
            return ""
        return f"{value:.6g}"
    if value is None:
        return ""
    return str(value)


def _json_clean(obj):
    if isinstance(obj, float) and not math.isfinite(obj):
        return None
    if isinstance(obj, dict):
        return {k: _json_clean(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_json_clean(v) for v in obj]
    return obj


def write_csv(stream, header, rows, comments=()):
    for c in comments:
        stream.write(f"# {c}\n")
    w = csv.writer(stream, lineterminator="\n")
    w.writerow(header)
    for r in rows:
        w.writerow([_fmt(v) for v in r])


def write_json(stream, obj):
    json.dump(_json_clean(obj), stream, indent=2, allow_nan=False)
    stream.write("\n")


def _records_to_table(records):
    header = list(records[0].keys()) if records else []
    return header, [[r[h] for h in header] for r in records]


def _emit(args, obj, records, comments=()):
    """Write ``obj`` as JSON or ``records`` (list of flat dicts) as CSV."""
    buf = io.StringIO()
    if args.format == "json":
        write_json(buf, obj)
    else:
        header, rows = _records_to_table(records)
        write_csv(buf, header, rows, comments)
    if args.out and args.out != "-":
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(buf.getvalue())
    else:
        sys.stdout.write(buf.getvalue())


# -- argument helpers -----------------------------------------------------------

def _targets(args):
    try:
        values = tuple(float(t) for t in str(args.targets).split(",") if t.strip())
    except ValueError:
        raise UsageError(f"bad --targets {args.targets!r}") from None
    if not values or any(not 0 < t <= 1 for t in values):
        raise UsageError("targets must lie in (0, 1]")
    return values


def _pair(text, name, kind=float):
    try:
        lo, hi = (kind(v) for v in text.split(":"))
    except ValueError:
        raise UsageError(f"bad {name} {text!r}; expected lo:hi") from None
    return lo, hi


def _distribution(args):
    missing = [f for f, v in (("--lambda", args.lam), ("--kmin", args.kmin), ("--kmax", args.kmax)) if v is None]
    if missing:
        raise UsageError("missing " + ", ".join(missing))
    try:
        return BoundedPowerLaw(args.lam, args.kmin, args.kmax)
    except DomainError as exc:
        raise UsageError(str(exc)) from None


def _fit_config(args):
    bracket = _pair(args.bracket, "--bracket") if args.bracket else FitConfig().bracket
    return FitConfig(
        strategy=args.fit_strategy,
        k_min=args.kmin,
        k_max=args.kmax,
        bracket=bracket,
        xtol=args.xtol if args.xtol is not None else FitConfig().xtol,
    )


def _analysis_config(args):
    return analysis.AnalysisConfig(
        fit=_fit_config(args), targets=_targets(args), use_n_as_kmax=bool(args.use_n_as_kmax)
    )


def _inputs(args):
    paths = list(args.inputs or [])
    if not paths:
        raise UsageError("no input edge-list files given")
    return paths


# -- commands -----------------------------------------------------------------

def cmd_theory(args):
    d = _distribution(args)
    row = analysis.theory_row(d, _targets(args))
    _emit(args, row, [row])


def cmd_sweep(args):
    if args.preset:
        try:
            panels = figures.panel_names(args.preset)
        except KeyError:
            choices = ", ".join(sorted(figures.PANELS) + sorted(figures.FIGURES))
            raise UsageError(f"unknown preset {args.preset!r}; choose from {choices}") from None
        outdir = args.out or "."
        os.makedirs(outdir, exist_ok=True)
        for panel in panels:
            header, rows = figures.panel_rows(panel)
            with open(os.path.join(outdir, f"{panel}.csv"), "w", encoding="utf-8", newline="") as fh:
                write_csv(fh, header, rows)
        return

    if not (args.metric and args.vary and args.range):
        raise UsageError("sweep needs --preset, or --metric, --vary and --range")
    parts = args.range.split(":")
    if len(parts) != 3:
        raise UsageError("--range must be start:stop:step")
    kind = float if args.vary == "lambda" else int
    try:
        start, stop, step = (kind(p) for p in parts)
        values = param_range(start, stop, step)
    except (ValueError, DomainError) as exc:
        raise UsageError(f"bad --range {args.range!r}: {exc}") from None
    fixed = {"lambda": args.lam, "k_min": args.kmin, "k_max": args.kmax}
    fixed = {k: v for k, v in fixed.items() if k != args.vary and v is not None}
    window = _pair(args.window, "--window") if args.window else None
    try:
        table = sweep(args.metric, args.vary, values, fixed, fit_decay=bool(args.fit_decay), window=window)
    except DomainError as exc:
        raise UsageError(str(exc)) from None
    obj = {
        "metric": table.metric,
        "varied_parameter": table.varied_parameter,
        "fixed": table.fixed,
        "decay_exponent": table.decay_exponent,
        "rows": [list(r) for r in table.rows],
    }
    records = [{table.varied_parameter: x, table.metric: y} for x, y in table.rows]
    comments = [f"metric={table.metric}", f"varied={table.varied_parameter}"]
    comments += [f"{k}={v}" for k, v in table.fixed.items()]
    if table.decay_exponent is not None:
        comments.append(f"decay_exponent={table.decay_exponent:.6g}")
    _emit(args, obj, records, comments)


def _analyze_paths(args):
    config = _analysis_config(args)
    results = []
    for path in _inputs(args):
        raw = read_edge_list(path)
        results.append(analysis.analyze_edges(raw, os.fspath(path), config))
    return results


def _report_records(results):
    records = []
    for res in results:
        for r in res.rows:
            records.append({
                "dataset": r.dataset,
                "metric": r.metric,
                "method": r.method,
                "theory": r.theory,
                "empirical": r.empirical,
                "rel_error": r.rel_error,
                "note": r.note,
            })
    return records


def cmd_analyze(args):
    results = _analyze_paths(args)
    obj = [res.to_dict() for res in results]
    records = []
    for res in results:
        base = dict(res.summary.to_dict())
        base.update({f"fit_{k}": v for k, v in res.fit.to_dict().items()})
        for rec in _report_records([res]):
            records.append({**rec, **base})
    _emit(args, obj, records)


def cmd_fit(args):
    config = _fit_config(args)
    obj, records = [], []
    for path in _inputs(args):
        cleaned = clean(read_edge_list(path))
        seq = degree_sequence(cleaned)
        summary = summarize(seq, len(cleaned))
        result = fit(seq, config)
        entry = {"dataset": os.fspath(path), **summary.to_dict(), **result.to_dict()}
        obj.append(entry)
        records.append(entry)
    _emit(args, obj, records)


def cmd_compare(args):
    config = _analysis_config(args)
    if args.table1:
        results = analysis.compare_table1(config)
    else:
        results = _analyze_paths(args)
    agg = analysis.aggregate(results)
    obj = {"rows": _report_records(results), "aggregate": agg}
    _emit(args, obj, agg)


def cmd_generate(args):
    if args.n is None or args.n < 1:
        raise UsageError("--n must be a positive node count")
    d = _distribution(args)
    rng = make_rng(args.seed)
    seq = sample_degrees(d, args.n, rng)
    edges = configuration_model(seq, rng, simple=not args.multigraph)
    meta = edges.meta
    header = (
        f"bounded power law lambda={d.lam:g} k_min={d.k_min} k_max={d.k_max}\n"
        f"nodes={args.n} seed={args.seed} simple={not args.multigraph}\n"
        f"parity_adjusted_node={meta['parity_adjusted_node']} edges_dropped={meta['edges_dropped']}"
    )
    if args.out and args.out != "-":
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            write_edge_list(edges, fh, header)
    else:
        write_edge_list(edges, sys.stdout, header)
    if meta["parity_adjusted_node"] is not None:
        print(f"odd degree sum: added one stub to node {meta['parity_adjusted_node']}", file=sys.stderr)
    if meta["edges_dropped"]:
        print(f"dropped {meta['edges_dropped']} unrepaired loop/repeat links", file=sys.stderr)


COMMANDS = {
    "theory": cmd_theory,
    "sweep": cmd_sweep,
    "analyze": cmd_analyze,
    "fit": cmd_fit,
    "generate": cmd_generate,
    "compare": cmd_compare,
}


def build_parser():
    common = _Parser(add_help=False)
    common.add_argument("--lambda", dest="lam", type=float)
    common.add_argument("--kmin", type=int)
    common.add_argument("--kmax", type=int)
    common.add_argument("--n", type=int)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--targets", default="0.20,0.27")
    common.add_argument("--use-n-as-kmax", action="store_true", default=False)
    common.add_argument("--fit-strategy", choices=("fixed", "scan"), default="fixed")
    common.add_argument("--xtol", type=float)
    common.add_argument("--bracket", help="exponent search bracket lo:hi")
    common.add_argument("--out", help="output file (a directory for sweep presets)")
    common.add_argument("--config", help="key = value file; its entries override flags")

    parser = _Parser(prog="asdegree", description="Bounded power-law analysis of AS-level degree data.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sub.add_parser("theory", parents=[common], help="model metrics for one parameter set")
    p = sub.add_parser("sweep", parents=[common], help="metric tables over a parameter range")
    p.add_argument("--preset", help="figure panel (fig1a ... fig4c) or whole figure (fig1 ... fig4)")
    p.add_argument("--metric")
    p.add_argument("--vary", choices=("lambda", "k_min", "k_max"))
    p.add_argument("--range", help="start:stop:step, inclusive")
    p.add_argument("--fit-decay", action="store_true", default=False)
    p.add_argument("--window", help="decay-fit window lo:hi")
    for name in ("analyze", "fit"):
        p = sub.add_parser(name, parents=[common])
        p.add_argument("inputs", nargs="*")
    p = sub.add_parser("compare", parents=[common], help="aggregate comparison across datasets")
    p.add_argument("inputs", nargs="*")
    p.add_argument("--table1", action="store_true", help="use the published snapshot metrics")
    p = sub.add_parser("generate", parents=[common], help="synthetic edge list")
    p.add_argument("--multigraph", action="store_true", help="skip loop/repeat repair")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.config:
            try:
                overrides = load_config(args.config)
            except OSError as exc:
                raise UsageError(f"cannot read config: {exc}") from None
            for dest, value in overrides.items():
                setattr(args, dest, value)
        if args.format not in ("csv", "json"):
            raise UsageError(f"unknown format {args.format!r}")
        COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"asdegree: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DATA_ERRORS as exc:
        print(f"asdegree: data error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except DomainError as exc:
        print(f"asdegree: data error: {exc}", file=sys.stderr)
        return EXIT_DATA
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
