"""Command-line front end.

One subcommand per capability; graphs come from ``--family`` descriptors
or ``--graph`` files, configurations from ``--config`` files (text or
JSON array) or inline ``--place`` pairs.  ``--json`` switches output to a
single JSON object with ``result`` plus optional ``witness``/``steps``.
Exit codes: 0 success, 1 domain error, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import configs, flows, formulas, smv, solver, weights, zerosum
from .errors import PebblingError
from .graphs import Graph, graph_from_text, make_family


def _add_graph_args(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--family", help="family descriptor, e.g. cycle:7:2")
    src.add_argument("--graph", help="path to a graph file")


def _add_config_args(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--config", help="path to a configuration file")
    src.add_argument("--place", help="inline pairs, e.g. 0:4,2:1")


def _load_graph(args) -> Graph:
    if args.family:
        return make_family(args.family)
    with open(args.graph) as fh:
        return graph_from_text(fh.read())


def _load_config(args, g: Graph) -> configs.Config:
    if getattr(args, "place", None):
        pairs = []
        for chunk in args.place.split(","):
            v, x = chunk.split(":")
            pairs.append((int(v), int(x)))
        return configs.config_from_pairs(g.vertex_count, pairs)
    with open(args.config) as fh:
        text = fh.read()
    if text.lstrip().startswith("["):
        return configs.config_from_json(text, g.vertex_count)
    return configs.config_from_text(text, g.vertex_count)


def _load_steps(path: str):
    steps = []
    with open(path) as fh:
        for raw in fh:
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            if parts[0] != "step" or len(parts) != 3:
                raise PebblingError(f"unrecognized step line: {raw!r}")
            steps.append((int(parts[1]), int(parts[2])))
    return steps


def _emit(args, result, witness=None, steps=None) -> None:
    if args.json:
        payload = {"result": result}
        if witness is not None:
            payload["witness"] = list(witness)
        if steps is not None:
            payload["steps"] = [list(s) for s in steps]
        print(json.dumps(payload, sort_keys=True))
        return
    print(result)
    if witness is not None:
        print("witness:", " ".join(str(x) for x in witness))
    if steps is not None:
        for u, v in steps:
            print(f"step {u} {v}")


def _parse_seq(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise PebblingError(f"malformed integer sequence: {text!r}") from exc


def _cmd_pi(args) -> None:
    g = _load_graph(args)
    out = solver.pebbling_number(g, args.target, args.n, jobs=args.jobs)
    _emit(args, out.value, witness=out.witness_unsolvable)


def _cmd_pi_all(args) -> None:
    g = _load_graph(args)
    _emit(args, solver.pebbling_number_graph(g, jobs=args.jobs))


def _cmd_solve(args) -> None:
    g = _load_graph(args)
    c = _load_config(args, g)
    if args.replay:
        final = solver.replay(g, c, _load_steps(args.replay))
        _emit(args, "replayed", witness=final)
        return
    out = solver.is_solvable(g, c, args.target, args.n)
    _emit(
        args,
        "solvable" if out.solvable else "unsolvable",
        witness=out.final,
        steps=out.witness,
    )


def _cmd_flow(args) -> None:
    g = _load_graph(args)
    c = _load_config(args, g)
    f = flows.solve_via_flow(g, c, args.target, args.n, use_lp=args.lp)
    if f is None:
        _emit(args, "infeasible")
        return
    if args.json:
        print(
            json.dumps(
                {
                    "result": "feasible",
                    "flow": [[u, v, count] for (u, v), count in sorted(f.flow.items())],
                    "excess": list(f.excess_vector()),
                },
                sort_keys=True,
            )
        )
        return
    print("feasible")
    sys.stdout.write(flows.flow_to_text(f))
    for v, x in enumerate(f.excess_vector()):
        print(f"excess {v} {x}")


def _cmd_witness(args) -> None:
    g = _load_graph(args)
    w = solver.unsolvable_witness(g, args.target, args.size)
    if w is None:
        _emit(args, "none")
    else:
        _emit(args, "found", witness=w)


def _cmd_2pp(args) -> None:
    g = _load_graph(args)
    pi = args.pi if args.pi else solver.pebbling_number_graph(g, jobs=args.jobs)
    holds, ce = solver.has_2pp(g, pi, variant=args.variant, jobs=args.jobs)
    if holds:
        _emit(args, "holds")
    else:
        c, t = ce
        _emit(args, f"fails for target {t}", witness=c)


def _cmd_tau(args) -> None:
    g = _load_graph(args)
    ok = solver.verify_tau(g, args.target, args.n, args.k, args.p, args.m_max)
    _emit(args, "certified" if ok else "refuted")


def _cmd_optimal_pi(args) -> None:
    g = _load_graph(args)
    size, c = solver.optimal_pebbling_number(g)
    _emit(args, size, witness=c)


def _cmd_tree_pi(args) -> None:
    g = _load_graph(args)
    _emit(args, formulas.pi_tree(g, args.root, args.k, args.n))


def _load_wfs(args, g: Graph):
    ws = []
    for path in args.wf or []:
        with open(path) as fh:
            ws.append(weights.weight_function_from_text(fh.read(), g.vertex_count))
    if args.cycle_pair is not None:
        ws.extend(weights.cycle_weight_functions(g.vertex_count, args.cycle_pair))
    if not ws:
        raise PebblingError("no weight functions given (--wf / --cycle-pair)")
    return ws


def _cmd_wf_validate(args) -> None:
    g = _load_graph(args)
    ws = _load_wfs(args, g)
    _emit(args, all(weights.validate_weight_function(g, w) for w in ws))


def _cmd_wf_bound(args) -> None:
    g = _load_graph(args)
    _emit(args, weights.covering_bound(g, _load_wfs(args, g)))


def _cmd_lp_bound(args) -> None:
    g = _load_graph(args)
    ws = _load_wfs(args, g)
    _emit(args, weights.lp_bound(g, ws[0].target, ws))


def _cmd_count_configs(args) -> None:
    _emit(args, formulas.config_count(args.vertices, args.pebbles))


def _cmd_zerosum(args) -> None:
    seq = _parse_seq(args.seq)
    if args.divisors:
        out = zerosum.divisor_zero_sum(args.n, seq)
    else:
        out = zerosum.gcd_zero_sum(args.n, seq)
    chosen = sorted(out)
    total = sum(seq[i - 1] for i in chosen)
    _emit(args, f"indices {','.join(map(str, chosen))} sum {total}")


def _cmd_erdos_lemke(args) -> None:
    seq = _parse_seq(args.seq)
    out = zerosum.erdos_lemke(args.n, args.d, seq)
    chosen = sorted(out)
    total = sum(seq[i - 1] for i in chosen)
    _emit(args, f"indices {','.join(map(str, chosen))} sum {total}")


def _cmd_emit_smv(args) -> None:
    g = _load_graph(args)
    if args.two_pp:
        pi = args.pi if args.pi else solver.pebbling_number_graph(g, jobs=args.jobs)
        model = smv.emit_2pp_model(g, pi)
    else:
        if args.pebbles is None:
            raise PebblingError("emit-smv needs --pebbles (or --two-pp)")
        model = smv.emit_pebbling_model(g, args.pebbles)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(model.text)
    else:
        sys.stdout.write(model.text)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pebble", description=__doc__)
    parser.add_argument("--json", action="store_true", help="JSON output")
    parser.add_argument("--jobs", type=int, default=1, help="worker processes")
    sub = parser.add_subparsers(dest="command", required=True)

    def cmd(name, fn, graph=True, config=False):
        p = sub.add_parser(name)
        p.set_defaults(fn=fn)
        if graph:
            _add_graph_args(p)
        if config:
            _add_config_args(p)
        return p

    p = cmd("pi", _cmd_pi)
    p.add_argument("--target", type=int, required=True)
    p.add_argument("--n", type=int, default=1)

    cmd("pi-all", _cmd_pi_all)

    p = cmd("solve", _cmd_solve, config=True)
    p.add_argument("--target", type=int, default=0)
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--replay", help="steps file to replay instead of solving")

    p = cmd("flow", _cmd_flow, config=True)
    p.add_argument("--target", type=int, required=True)
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--lp", action="store_true", help="LP-relaxation pruning")

    p = cmd("witness", _cmd_witness)
    p.add_argument("--target", type=int, required=True)
    p.add_argument("--size", type=int, required=True)

    p = cmd("2pp", _cmd_2pp)
    p.add_argument("--pi", type=int)
    p.add_argument("--variant", choices=["support", "odd"], default="support")

    p = cmd("tau", _cmd_tau)
    p.add_argument("--target", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--m-max", type=int, required=True)

    cmd("optimal-pi", _cmd_optimal_pi)

    p = cmd("tree-pi", _cmd_tree_pi)
    p.add_argument("--root", type=int, required=True)
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--n", type=int, default=1)

    for name, fn in [
        ("wf-validate", _cmd_wf_validate),
        ("wf-bound", _cmd_wf_bound),
        ("lp-bound", _cmd_lp_bound),
    ]:
        p = cmd(name, fn)
        p.add_argument("--wf", action="append", help="weight-function file")
        p.add_argument(
            "--cycle-pair",
            type=int,
            metavar="TARGET",
            help="generate the mirror pair for a cycle graph",
        )

    p = cmd("count-configs", _cmd_count_configs, graph=False)
    p.add_argument("--vertices", type=int, required=True)
    p.add_argument("--pebbles", type=int, required=True)

    p = cmd("zerosum", _cmd_zerosum, graph=False)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seq", required=True, help="comma-separated integers")
    p.add_argument(
        "--divisors", action="store_true", help="exact divisor-sum variant"
    )

    p = cmd("erdos-lemke", _cmd_erdos_lemke, graph=False)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--seq", required=True, help="comma-separated integers")

    p = cmd("emit-smv", _cmd_emit_smv)
    p.add_argument("--pebbles", type=int, help="total pebbles (plain model)")
    p.add_argument("--two-pp", action="store_true")
    p.add_argument("--pi", type=int)
    p.add_argument("--out", help="output path (default stdout)")

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.fn(args)
    except (PebblingError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
