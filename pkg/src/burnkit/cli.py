"""``burnkit`` command line.

Exit codes: 0 success, 1 a property check failed, 2 bad input (parse
error, invalid parameter, out-of-domain request), 3 a search budget ran
out (a partial report is still printed).
"""
from __future__ import annotations

import argparse
import csv
import io as _io
import json
import sys
from pathlib import Path

from . import generators as gen
from .bounds import bound_branching, bound_leafstrip, bound_report, caterpillar_lower_bound, table1
from .burning import BurnSchedule, exact_burning_number, exact_modified_burning_number, simulate
from .errors import BudgetExceeded, BurnkitError
from .graph import Graph, Tree, graph_power
from .io import format_edge_list, read_edge_list, read_labels, resolve_vertex, write_edge_list
from .powers import burn_graph_power, extract_branching_spanning_tree
from .schedule import burn_branching_tree, leafstrip_schedule
from .spanning import DEFAULT_SEARCH_BUDGET, branch_number
from .verify import ALIASES, SUITES, figure1_tree, resolve_suite, run_suite

EXIT_OK, EXIT_PROPERTY, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3

FAMILIES = ("path", "star", "complete", "cycle", "spider", "caterpillar",
            "random-tree", "branching-tree", "random-graph", "figure1")


class CliError(Exception):
    def __init__(self, message: str, code: int = EXIT_INPUT):
        super().__init__(message)
        self.code = code


def _need(args, *names):
    missing = [f"--{n.replace('_', '-')}" for n in names if getattr(args, n) is None]
    if missing:
        raise CliError(f"--family {args.family} needs {', '.join(missing)}")


def load_graph(args) -> Graph:
    """Graph from ``--input`` or ``--family``; exactly one must be given."""
    if (args.input is None) == (args.family is None):
        raise CliError("give exactly one of --input or --family")
    if args.input is not None:
        try:
            return read_edge_list(args.input)
        except OSError as exc:
            raise CliError(f"cannot read {args.input}: {exc.strerror}") from None
    fam, seed = args.family, args.seed
    if fam == "figure1":
        return figure1_tree()
    if fam == "spider":
        _need(args, "legs", "leg_len")
        return gen.spider(args.legs, args.leg_len)
    _need(args, "n")
    n = args.n
    if fam == "path":
        return gen.path(n)
    if fam == "star":
        return gen.star(n)
    if fam == "complete":
        return gen.complete_graph(n)
    if fam == "cycle":
        return gen.cycle(n)
    if fam == "random-tree":
        return gen.random_tree(n, seed)
    if fam == "random-graph":
        _need(args, "m")
        return gen.random_connected_graph(n, args.m, seed)
    _need(args, "k")
    if fam == "caterpillar":
        return gen.caterpillar_branching(n, args.k, seed)
    return gen.random_branching_tree(n, args.k, seed)


def load_tree(args) -> Tree:
    g = load_graph(args)
    return g if isinstance(g, Tree) else Tree.from_graph(g)


def _labels(args):
    return read_labels(args.labels) if args.labels else None


def _names(labels):
    return {v: k for k, v in labels.items()} if labels else {}


def _vertex_list(text: str | None, labels) -> list[int]:
    if not text:
        return []
    return [resolve_vertex(tok, labels) for tok in text.replace(",", " ").split()]


def _require_k(args) -> int:
    if args.k is None:
        raise CliError("--k is required")
    return args.k


# ---- rendering


def _dump_json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _csv(rows: list[dict]) -> str:
    if not rows:
        return ""
    buf = _io.StringIO()
    w = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
    w.writeheader()
    w.writerows(rows)
    return buf.getvalue()


def trace_rows(g: Graph, sched: BurnSchedule, names=None) -> list[dict]:
    """One row per round: source, and vertices that first burn in it."""
    names = names or {}
    trace = simulate(g, sched)
    fmt = lambda vs: " ".join(names.get(v, str(v)) for v in vs)  # noqa: E731
    rows = []
    for r in range(1, trace.rounds_used + 1):
        src = sched.sources[r - 1]
        extra = fmt(sorted(sched.initial_set)) if r == 1 and sched.initial_set else ""
        rows.append({"round": r, "source": names.get(src, str(src)), "initial": extra,
                     "newly_burned": fmt(trace.burned_in(r))})
    return rows


def render_trace(g: Graph, sched: BurnSchedule, fmt: str, names=None) -> str:
    trace = simulate(g, sched)
    names = names or {}
    rows = trace_rows(g, sched, names)
    unburned = [names.get(v, str(v)) for v in trace.unburned]
    if fmt == "json":
        return _dump_json({
            "schedule": sched.to_json(),
            "complete": trace.complete,
            "burn_round": list(trace.burn_round),
            "unburned": unburned,
            "rounds": rows,
        })
    if fmt == "csv":
        return _csv(rows)
    width = max([len(r["newly_burned"]) for r in rows] + [12])
    lines = [f"{'round':>5}  {'source':<8}  {'newly burned':<{width}}"]
    for r in rows:
        src = r["source"] + (f" +{{{r['initial']}}}" if r["initial"] else "")
        lines.append(f"{r['round']:>5}  {src:<8}  {r['newly_burned']:<{width}}")
    if trace.complete:
        lines.append(f"all {g.n} vertices burned by round {trace.rounds_used}")
    else:
        lines.append(f"unburned after round {trace.rounds_used}: {' '.join(unburned)}")
    return "\n".join(lines) + "\n"


def _fail_closed(g: Graph, sched: BurnSchedule) -> None:
    if not simulate(g, sched).complete:
        raise CliError("internal error: certificate does not burn the graph", EXIT_PROPERTY)


def _emit_certificate(g: Graph, cert, fmt: str, names) -> str:
    _fail_closed(g, cert.schedule)
    if fmt == "json":
        return _dump_json(cert.to_json())
    if fmt == "csv":
        return _csv(trace_rows(g, cert.schedule, names))
    head = (f"n={cert.n} k={cert.k} rounds={cert.claimed_rounds} "
            f"bound[{cert.bound_used}]={cert.bound} within_bound={cert.within_bound}\n")
    return head + render_trace(g, cert.schedule, "text", names)


# ---- subcommands


def cmd_burn(args) -> tuple[str, int]:
    g = load_graph(args)
    labels = _labels(args)
    sources = _vertex_list(args.sources, labels)
    if not sources:
        raise CliError("--sources is required")
    sched = BurnSchedule(tuple(sources), frozenset(_vertex_list(args.initial, labels)))
    return render_trace(g, sched, args.format or "text", _names(labels)), EXIT_OK


def cmd_exact(args) -> tuple[str, int]:
    g = load_graph(args)
    labels = _labels(args)
    initial = _vertex_list(args.initial, labels)
    fmt = args.format or "json"
    try:
        if initial:
            b, witness = exact_modified_burning_number(g, initial, args.budget)
        else:
            b, witness = exact_burning_number(g, args.budget)
    except BudgetExceeded as exc:
        report = {"n": g.n, "budget_exceeded": True, "lower_bound": exc.partial, "message": str(exc)}
        return (_dump_json(report) if fmt != "csv" else _csv([report])), EXIT_BUDGET
    _fail_closed(g, witness)
    if fmt == "json":
        return _dump_json({"n": g.n, "burning_number": b, "witness": witness.to_json()}), EXIT_OK
    if fmt == "csv":
        return _csv(trace_rows(g, witness, _names(labels))), EXIT_OK
    return f"burning number {b}\n" + render_trace(g, witness, "text", _names(labels)), EXIT_OK


def cmd_schedule(args) -> tuple[str, int]:
    t = load_tree(args)
    k = _require_k(args)
    if args.method == "branching":
        cert = burn_branching_tree(t, k)
    else:
        cert = leafstrip_schedule(t, k, inner=args.inner)
    return _emit_certificate(t, cert, args.format or "json", _names(_labels(args))), EXIT_OK


def cmd_power(args) -> tuple[str, int]:
    g = load_graph(args)
    k = _require_k(args)
    cert = burn_graph_power(g, k)
    return _emit_certificate(graph_power(g, k), cert, args.format or "json", {}), EXIT_OK


def cmd_spantree(args) -> tuple[str, int]:
    t = load_tree(args)
    k = _require_k(args)
    s, log = extract_branching_spanning_tree(t, k)
    if args.out:
        write_edge_list(s, args.out)
    fmt = args.format or "json"
    if fmt == "text":
        return format_edge_list(s), EXIT_OK
    if fmt == "csv":
        return _csv([{"u": u, "v": v} for u, v in s.edges()]), EXIT_OK
    return _dump_json({"n": s.n, "k": k, "edges": [list(e) for e in s.edges()],
                       "peeling": log.to_json()}), EXIT_OK


def cmd_bounds(args) -> tuple[str, int]:
    if args.n is None or args.k is None:
        raise CliError("bounds needs --n and --k")
    rep = bound_report(args.n, args.k).to_json()
    fmt = args.format or "json"
    if fmt == "json":
        return _dump_json(rep), EXIT_OK
    if fmt == "csv":
        rep["smallest"] = " ".join(rep["smallest"])
        return _csv([rep]), EXIT_OK
    return "".join(f"{key}: {val}\n" for key, val in rep.items()), EXIT_OK


def cmd_table1(args) -> tuple[str, int]:
    rows = [{"k": k, "n": n} for k, n in table1().items()]
    fmt = args.format or "csv"
    if fmt == "json":
        return _dump_json(rows), EXIT_OK
    if fmt == "text":
        return "".join(f"k={r['k']:<4} n={r['n']}\n" for r in rows), EXIT_OK
    return _csv(rows), EXIT_OK


def cmd_verify(args) -> tuple[str, int]:
    names = list(SUITES) if args.suite in (None, "all") else [resolve_suite(args.suite)]
    results = [run_suite(name, args.trees, args.seed) for name in names]
    ok = all(r.passed for r in results)
    fmt = args.format or "text"
    if fmt == "json":
        out = _dump_json({"seed": args.seed, "passed": ok, "suites": [r.to_json() for r in results]})
    elif fmt == "csv":
        out = _csv([{"suite": r.name, "passed": r.passed, "checked": r.checked,
                     "failures": len(r.failures)} for r in results])
    else:
        lines = []
        for r in results:
            lines.append(f"{'PASS' if r.passed else 'FAIL'}  {r.name:<20} checked={r.checked}")
            lines.extend(f"      {msg}" for msg in r.failures[:5])
        lines.append("all suites passed" if ok else "some suites failed")
        out = "\n".join(lines) + "\n"
    return out, EXIT_OK if ok else EXIT_PROPERTY


def cmd_branch(args) -> tuple[str, int]:
    g = load_graph(args)
    res = branch_number(g, args.budget or DEFAULT_SEARCH_BUDGET)
    fmt = args.format or "json"
    if fmt == "json":
        out = _dump_json(res.to_json())
    elif fmt == "csv":
        out = _csv([{"branch": res.value, "exact": res.exact, **res.bounds}])
    else:
        out = f"branch {res.value} ({'exact' if res.exact else 'lower bound'})\n"
    return out, EXIT_OK if res.exact else EXIT_BUDGET


def cmd_report(args) -> tuple[str, int]:
    """Write the threshold table, bound curves and figures under ``--outdir``."""
    from . import plotting

    outdir = Path(args.outdir or "report")
    outdir.mkdir(parents=True, exist_ok=True)
    k = args.k or 3
    n_max = args.n or 200
    written = []

    path = outdir / "table1.csv"
    path.write_text(_csv([{"k": kk, "n": n} for kk, n in table1().items()]), newline="\n")
    written.append(path)

    rows = [{"n": n, "bound_branching": bound_branching(n, k), "bound_leafstrip": bound_leafstrip(n, k),
             "caterpillar_lb": caterpillar_lower_bound(n, k)} for n in range(1, n_max + 1)]
    path = outdir / f"bounds_k{k}.csv"
    path.write_text(_csv(rows), newline="\n")
    written.append(path)

    t = figure1_tree()
    fig1 = BurnSchedule((2, 5, 8))
    path = outdir / "figure1_trace.csv"
    path.write_text(_csv(trace_rows(t, fig1, {i: f"v{i + 1}" for i in range(t.n)})), newline="\n")
    written.append(path)

    written.append(plotting.plot_threshold(outdir / "threshold.png"))
    written.append(plotting.plot_bounds(k, n_max, outdir / f"bounds_k{k}.png"))
    written.append(plotting.plot_trace(simulate(t, fig1), outdir / "figure1_trace.png", ("v3", "v6", "v9")))
    return _csv([{"file": str(p)} for p in written]), EXIT_OK


COMMANDS = {
    "burn": (cmd_burn, "simulate a given schedule and print the per-round table"),
    "exact": (cmd_exact, "exact burning number with a witness schedule"),
    "schedule": (cmd_schedule, "constructive schedule for a k+-branching tree"),
    "power": (cmd_power, "schedule for the k-th power of a connected graph"),
    "spantree": (cmd_spantree, "(k+1)+-branching spanning tree of a tree's k-th power"),
    "bounds": (cmd_bounds, "every closed-form bound at (n, k)"),
    "table1": (cmd_table1, "largest n where the branching bound is at least as good, per k"),
    "verify": (cmd_verify, "run seeded property suites"),
    "branch": (cmd_branch, "largest k admitting a k+-branching spanning tree"),
    "report": (cmd_report, "write CSV tables and PNG figures to a directory"),
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    src = common.add_argument_group("input")
    src.add_argument("--input", help="edge-list file ('n <count>' header, then 'u v' lines)")
    src.add_argument("--family", choices=FAMILIES, help="generate the input instead of reading it")
    src.add_argument("--n", type=int)
    src.add_argument("--k", type=int)
    src.add_argument("--m", type=int, help="edge count for random-graph")
    src.add_argument("--seed", type=int, default=0)
    src.add_argument("--legs", type=int)
    src.add_argument("--leg-len", type=int)
    src.add_argument("--labels", help="sidecar vertex-name map (JSON or 'name id' lines)")
    common.add_argument("--format", choices=("json", "csv", "text"))

    parser = argparse.ArgumentParser(prog="burnkit", description="Graph burning toolkit.")
    sub = parser.add_subparsers(dest="command", required=True)
    ps = {name: sub.add_parser(name, parents=[common], help=text) for name, (_, text) in COMMANDS.items()}

    ps["burn"].add_argument("--sources", help="comma/space separated sources, one per round")
    for name in ("burn", "exact"):
        ps[name].add_argument("--initial", help="vertices burned for free in round 1")
    ps["exact"].add_argument("--budget", type=int, help="maximum rounds to try (default n)")
    ps["branch"].add_argument("--budget", type=int, help="search steps per k")
    ps["schedule"].add_argument("--method", choices=("branching", "leafstrip"), default="branching")
    ps["schedule"].add_argument("--inner", choices=("exact", "recursive"), default="exact",
                                help="core strategy for --method leafstrip")
    ps["spantree"].add_argument("--out", help="also write the spanning tree as an edge list")
    suites = sorted(set(SUITES) | set(ALIASES) | {"all"})
    ps["verify"].add_argument("--suite", default="all", choices=suites)
    ps["verify"].add_argument("--trees", type=int, help="instance count (suite default if omitted)")
    ps["report"].add_argument("--outdir", help="output directory (default ./report)")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handler = COMMANDS[args.command][0]
    try:
        out, code = handler(args)
    except CliError as exc:
        print(f"burnkit: {exc}", file=sys.stderr)
        return exc.code
    except BudgetExceeded as exc:
        print(_dump_json({"budget_exceeded": True, "partial": exc.partial, "message": str(exc)}), end="")
        print(f"burnkit: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (BurnkitError, ValueError) as exc:
        print(f"burnkit: {exc}", file=sys.stderr)
        return EXIT_INPUT
    sys.stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
