"""Command line front end.

Every subcommand prints a JSON object ``{command, inputs, output,
elapsed_ms}`` on stdout (or a plain rendering with ``--format text``).
Exit codes: 0 success, 1 domain error, 2 usage error, 3 internal
inconsistency between oracles.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction

from .characters import mn_character, normalized_character
from .config import Bounds
from .cumulants import free_cumulants
from .kerov import ConsistencyError, cumulant_polynomial, kerov_polynomial, positivity_report
from .maps import BipartiteMap, MalformedMapError, stanley_character
from .partitions import Partition, Permutation
from .polynomials import RPolynomial, graded_degree
from .restriction import scaling_experiment
from .transport import (
    DecoratedMap,
    has_disallowed_disconnecting_edge,
    positive_flow_witness,
    transport_polynomial,
)
from .verify import run_checks


def _int_list(text: str) -> tuple[int, ...]:
    try:
        values = tuple(int(t) for t in text.split(",") if t.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None
    if not values:
        raise argparse.ArgumentTypeError("expected at least one integer")
    return values


def _partition(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {v}")
    return v


def _poly(p: RPolynomial) -> dict:
    return {"polynomial": str(p), "terms": p.to_json()}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--threads", type=_positive, default=1, help="worker processes (output is identical for any value)")
    common.add_argument("--max-map-k", type=_positive, default=8, help=f"map enumeration bound (hard cap {Bounds.HARD_MAX_MAP_K})")
    common.add_argument("--max-kerov-k", type=_positive, default=7, help=f"Kerov solve bound (hard cap {Bounds.HARD_MAX_KEROV_K})")

    parser = argparse.ArgumentParser(prog="kerov", description="Exact characters, free cumulants and Kerov polynomials.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("char", parents=[common], help="irreducible character chi^lambda(mu)")
    p.add_argument("--lambda", dest="lam", type=_partition, required=True)
    p.add_argument("--class", dest="mu", type=_int_list, required=True)

    p = sub.add_parser("nchar", parents=[common], help="normalized character on disjoint cycles")
    p.add_argument("--lambda", dest="lam", type=_partition, required=True)
    p.add_argument("--cycles", type=_int_list, required=True)

    p = sub.add_parser("cumulants", parents=[common], help="free cumulants R_1..R_max")
    p.add_argument("--lambda", dest="lam", type=_partition, required=True)
    p.add_argument("--max", dest="k_max", type=_positive, required=True)

    p = sub.add_parser("kerov", parents=[common], help="Kerov polynomial of Ch_k")
    p.add_argument("--k", type=_positive, required=True)
    p.add_argument("--method", choices=("solve", "maps"), default="solve")

    p = sub.add_parser("stanley", parents=[common], help="Ch_k through the map-sum formula")
    p.add_argument("--lambda", dest="lam", type=_partition, required=True)
    p.add_argument("--k", type=_positive, required=True)

    p = sub.add_parser("cov", parents=[common], help="cumulant (covariance) Kerov polynomial")
    p.add_argument("--cycles", type=_int_list, required=True)

    p = sub.add_parser("flow-check", parents=[common], help="strict positivity of a decorated map")
    p.add_argument("--sigma1", required=True, help="white permutation in cycle notation, e.g. '(1,6)(4,7,5)'")
    p.add_argument("--decor", type=_int_list, required=True, help="R index per black vertex, in order of smallest label")
    p.add_argument("--k", type=_positive, default=None, help="number of edges (default: largest label)")

    p = sub.add_parser("restrict-sim", parents=[common], help="Monte Carlo scaling law for the restriction process")
    p.add_argument("--lambda", dest="lam", type=_partition, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--k", type=_positive, required=True)
    p.add_argument("--trials", type=_positive, required=True)
    p.add_argument("--seed", type=int, required=True)

    p = sub.add_parser("verify", parents=[common], help="run the cross-oracle suites")
    p.add_argument("--level", choices=("quick", "full"), default="quick")
    return parser


def _dispatch(args: argparse.Namespace, bounds: Bounds) -> tuple[object, str]:
    """Returns (JSON output, text rendering)."""
    cmd = args.command
    if cmd == "char":
        v = mn_character(args.lam, args.mu)
        return str(v), str(v)
    if cmd == "nchar":
        v = normalized_character(args.lam, args.cycles)
        return str(v), str(v)
    if cmd == "cumulants":
        vals = [str(v) for v in free_cumulants(args.lam, args.k_max)]
        return vals, " ".join(vals)
    if cmd == "kerov":
        if args.method == "solve":
            poly = kerov_polynomial(args.k, bounds.max_kerov_k)
        else:
            poly = transport_polynomial(args.k, bounds.max_map_k)
        return _poly(poly), str(poly)
    if cmd == "stanley":
        v = stanley_character(args.lam, args.k, bounds.max_map_k)
        return str(v), str(v)
    if cmd == "cov":
        poly = cumulant_polynomial(args.cycles, bounds.max_kerov_k)
        out = _poly(poly)
        out["graded_degree"] = graded_degree(poly)
        out["nonnegative"] = positivity_report(poly).ok
        out["negated_nonnegative"] = positivity_report(-poly).ok
        return out, str(poly)
    if cmd == "flow-check":
        sigma1 = Permutation.parse(args.sigma1, args.k)
        m = BipartiteMap.from_white(sigma1)
        d = DecoratedMap(m, args.decor)
        witness = positive_flow_witness(d)
        out = {
            "sigma1": str(m.sigma_white),
            "sigma2": str(m.sigma_black),
            "genus": m.genus,
            "black_vertices": [list(c) for c in m.black_vertices],
            "feasible": witness is not None,
            "witness": None if witness is None else [str(f) for f in witness],
            "disallowed_disconnecting_edge": has_disallowed_disconnecting_edge(m),
        }
        return out, "feasible" if witness is not None else "infeasible"
    if cmd == "restrict-sim":
        report = scaling_experiment(args.lam, args.m, args.k, args.trials, args.seed, workers=args.threads)
        out = report.to_json()
        text = f"predicted={report.predicted} estimate={report.estimate:.6g} stderr={report.stderr:.6g}"
        return out, text
    if cmd == "verify":
        results = run_checks(args.level)
        rows = [{"check": r.name, "passed": r.passed, "detail": r.detail, "elapsed_ms": r.elapsed_ms} for r in results]
        text = "\n".join(f"{'PASS' if r.passed else 'FAIL'}  {r.name:<30} {r.elapsed_ms:>7} ms  {r.detail}" for r in results)
        if not all(r.passed for r in results):
            raise ConsistencyError(text)
        return rows, text
    raise AssertionError(cmd)


def _inputs(args: argparse.Namespace) -> dict:
    out = {}
    for key, value in vars(args).items():
        if key in ("format", "command"):
            continue
        if isinstance(value, Partition):
            value = str(value)
        elif isinstance(value, tuple):
            value = list(value)
        out["lambda" if key == "lam" else key] = value
    return out


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    t0 = time.perf_counter()
    try:
        bounds = Bounds(max_map_k=args.max_map_k, max_kerov_k=args.max_kerov_k)
        output, text = _dispatch(args, bounds)
    except ConsistencyError as exc:
        print(f"kerov: internal consistency failure: {exc}", file=sys.stderr)
        return 3
    except (ValueError, MalformedMapError) as exc:
        print(f"kerov: {exc}", file=sys.stderr)
        return 1
    elapsed = int(1000 * (time.perf_counter() - t0))
    if args.format == "text":
        print(text)
    else:
        result = {"command": args.command, "inputs": _inputs(args), "output": output, "elapsed_ms": elapsed}
        print(json.dumps(result, default=lambda o: str(o) if isinstance(o, Fraction) else repr(o)))
    return 0


if __name__ == "__main__":
    sys.exit(main())
