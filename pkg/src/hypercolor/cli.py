"""Command line front end.  Every command prints one JSON report on stdout.

Exit codes: 0 success, 2 invalid input, 3 enumeration cap exceeded.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from math import comb
from pathlib import Path

from hypercolor import __version__
from hypercolor.errors import FeasibilityError, InvalidHypergraph, InvalidParameters
from hypercolor.exact import (
    M_bounds,
    M_exact,
    M_general,
    ParamSet,
    m_exact,
    winning_threshold,
)
from hypercolor.hypergraph import complete, dumps_hypergraph, load_hypergraph, random_hypergraph
from hypercolor.oracle import brute_max, brute_max_complete
from hypercolor.solver import SolveConfig, local_search

EXIT_INPUT = 2
EXIT_FEASIBILITY = 3


def report(command: str, inputs: dict, outputs: dict, provenance: str) -> dict:
    return {
        "command": command,
        "inputs": inputs,
        "outputs": outputs,
        "provenance": provenance,
        "tool_version": __version__,
    }


def _params(args) -> ParamSet:
    ps = ParamSet(args.n, args.k, args.r, args.p)
    if ps.p < 2:
        raise InvalidParameters(f"need p >= 2, got p={ps.p}")
    return ps


def _formula_M(ps: ParamSet) -> int:
    if ps.divisible:
        return M_exact(ps.n, ps.k, ps.r, ps.p).value
    return M_general(ps.n, ps.k, ps.r, ps.p).value


def cmd_exact(args) -> dict:
    ps = _params(args)
    inputs = {"n": ps.n, "k": ps.k, "r": ps.r, "p": ps.p}
    if ps.divisible:
        outputs = {
            "M": str(M_exact(ps.n, ps.k, ps.r, ps.p).value),
            "m": [str(m_exact(ps.n, ps.k, ps.r, i).value) for i in range(1, ps.p)],
        }
    else:
        bounds = M_bounds(ps.n, ps.k, ps.r, ps.p)
        outputs = {
            "M": str(M_general(ps.n, ps.k, ps.r, ps.p).value),
            "lower": str(bounds.lower),
            "upper": str(bounds.upper),
            "n1": str(bounds.n1),
            "n2": str(bounds.n2),
        }
    return report("exact", inputs, outputs, "formula")


def cmd_oracle(args) -> dict:
    ps = _params(args)
    inputs = {"n": ps.n, "k": ps.k, "r": ps.r, "p": ps.p, "mode": args.mode}
    if args.mode == "full":
        result = brute_max(complete(ps.n, ps.k), ps.r, ps.p, workers=args.threads)
        witness = list(result.witness.assignment)
    else:
        result = brute_max_complete(ps.n, ps.k, ps.r, ps.p)
        witness = list(result.sizes)
    formula = _formula_M(ps)
    outputs = {
        "best_value": str(result.best_value),
        "witness": witness,
        "search_space_size": str(result.search_space_size),
        "mode": result.mode,
        "formula_M": str(formula),
        "formula_agrees": formula == result.best_value,
    }
    return report("oracle", inputs, outputs, "oracle")


def cmd_solve(args) -> dict:
    if args.input is None:
        raise InvalidParameters("solve needs --input")
    try:
        H = load_hypergraph(args.input)
    except OSError as exc:
        raise InvalidHypergraph(f"cannot read {args.input}: {exc.strerror}") from None
    config = SolveConfig(seed=args.seed, restarts=args.restarts)
    result = local_search(H, args.r, args.p, config, workers=args.threads)
    inputs = {"input": str(args.input), "r": args.r, "p": args.p,
              "seed": args.seed, "restarts": args.restarts}
    outputs = {
        "best_value": str(result.best_value),
        "edges": str(len(H.edges)),
        "coloring": list(result.best_coloring.assignment),
        "converged": result.converged,
        "moves_taken": str(result.moves_taken),
        "restarts_used": str(result.restarts_used),
    }
    return report("solve", inputs, outputs, "solver")


def cmd_threshold(args) -> dict:
    ps = _params(args)
    threshold = winning_threshold(ps.n, ps.k, ps.r, ps.p)
    outputs = {
        "threshold": str(threshold),
        "profit": str(comb(ps.n, ps.k) - threshold),
        "M": str(threshold - 1),
    }
    return report("threshold", {"n": ps.n, "k": ps.k, "r": ps.r, "p": ps.p}, outputs, "formula")


def cmd_gen(args) -> dict:
    H = random_hypergraph(args.n, args.k, args.m, args.seed)
    text = dumps_hypergraph(H)
    outputs = {
        "edges": str(len(H.edges)),
        "sha256": hashlib.sha256(text.encode()).hexdigest(),
    }
    if args.output is not None:
        Path(args.output).write_text(text)
        outputs["output"] = str(args.output)
    else:
        outputs["hypergraph"] = H.to_dict()
    inputs = {"n": args.n, "k": args.k, "m": args.m, "seed": args.seed,
              "output": None if args.output is None else str(args.output)}
    return report("gen", inputs, outputs, "generator")


def render_pretty(doc: dict) -> str:
    lines = [f"{doc['command']} ({doc['provenance']}, hypercolor {doc['tool_version']})"]
    for section in ("inputs", "outputs"):
        lines.append(f"{section}:")
        for key, value in doc[section].items():
            if isinstance(value, list):
                value = ", ".join(str(v) for v in value) or "-"
            elif isinstance(value, dict):
                value = json.dumps(value)
            lines.append(f"  {key:>18}: {value}")
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hypercolor",
        description="Counts and searches for properly (r, p)-colored hyperedges.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, nkrp=True):
        if nkrp:
            for flag in ("--n", "--k", "--r", "--p"):
                p.add_argument(flag, type=int, required=True)
        p.add_argument("--pretty", action="store_true", help="human-readable output")
        p.add_argument("--threads", type=int, default=1, help="worker processes (results do not depend on it)")

    p = sub.add_parser("exact", help="closed-form M and its terms")
    common(p)
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("oracle", help="brute-force maximum, compared with the formula")
    common(p)
    p.add_argument("--mode", choices=("full", "composition"), default="composition")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("solve", help="local search on a hypergraph file")
    common(p, nkrp=False)
    p.add_argument("--input", type=Path)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--restarts", type=int, default=8)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("threshold", help="winning edge count in the adversary game")
    common(p)
    p.set_defaults(func=cmd_threshold)

    p = sub.add_parser("gen", help="seeded random hypergraph in the interchange format")
    common(p, nkrp=False)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--output", type=Path)
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.threads < 1:
        print("error: --threads must be >= 1", file=sys.stderr)
        return EXIT_INPUT
    try:
        doc = args.func(args)
    except (InvalidParameters, InvalidHypergraph) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except FeasibilityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FEASIBILITY
    print(render_pretty(doc) if args.pretty else json.dumps(doc))
    return 0


if __name__ == "__main__":
    sys.exit(main())
