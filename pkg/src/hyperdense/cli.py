"""Command-line front end.

Exit status: 0 on success, 1 when the instance is rejected (parse,
validation or shape errors), 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
import warnings
from decimal import Decimal, localcontext
from fractions import Fraction

from . import io as hio
from .errors import HyperdenseError
from .flow import build_network
from .hypergraph import Shape, Solution, WeightedHypergraph, as_fraction
from .lp import export_lp
from .oracle import SHAPES, brute_force, random_instance
from .peel import removal_csv, solve_concave, solve_greedy, solve_para
from .search import solve_eps, solve_exact

ALGORITHMS = ("auto", "flow", "flow-eps", "greedy", "para", "concave")

ALGO_HELP = """\
algorithms and the guarantee each reports (JSON "guarantee" field):
  flow      "exact": optimal density; every table must be convex
  flow-eps  "1-eps": density >= (1-eps) * optimum, eps in (0,1); convex tables
  greedy    "1/r": density >= optimum / r when every table is convex,
            otherwise "none"
  para      "1/(r(1+eps))": density >= optimum / (r(1+eps)), eps > 0, when
            every table is convex, otherwise "none"
  concave   "exact": best single vertex, optimal when every table is concave
  auto      concave if every table is concave, else flow if every table is
            convex, else greedy with no guarantee (a warning is printed)
"""


class UsageError(Exception):
    pass


def decimal_string(x: Fraction, digits: int = 12) -> str:
    with localcontext() as ctx:
        ctx.prec = digits
        return str(Decimal(x.numerator) / Decimal(x.denominator))


def fraction_string(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _parse_eps(text):
    if text is None:
        return None
    try:
        return as_fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"--eps: cannot parse {text!r}") from exc


def _read_instance(args) -> WeightedHypergraph:
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        if args.input in (None, "-"):
            data = sys.stdin.buffer.read()
        else:
            try:
                with open(args.input, "rb") as fh:
                    data = fh.read()
            except OSError as exc:
                raise UsageError(f"cannot read {args.input}: {exc.strerror}") from exc
        H = hio.load_instance(data, args.format)
    for w in caught:
        print(f"warning: {w.message}", file=sys.stderr)
    return H


def _write(args, text: str):
    if args.output in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(args.output, "w") as fh:
            fh.write(text)


def _route(H: WeightedHypergraph, algo: str) -> str:
    if algo != "auto":
        return algo
    if H.all_concave:
        return "concave"
    if H.all_convex:
        return "flow"
    print("warning: mixed convex/concave tables; using greedy peeling with no guarantee",
          file=sys.stderr)
    return "greedy"


def _guarantee(algo: str, H: WeightedHypergraph) -> str:
    if algo in ("flow", "concave", "brute"):
        return "exact"
    if algo == "flow-eps":
        return "1-eps"
    if not H.all_convex:
        return "none"
    return "1/r" if algo == "greedy" else "1/(r(1+eps))"


def _report(H, sol: Solution, algo: str, elapsed: float, extra=None) -> dict:
    out = {
        "algorithm": algo,
        "density": fraction_string(sol.density),
        "density_approx": decimal_string(sol.density),
        "vertices": list(sol.vertices),
        "n": H.n, "m": H.m, "p": H.p, "r": H.r,
        "psi": fraction_string(H.psi),
        "iterations": sol.iterations,
        "guarantee": _guarantee(algo, H),
        "elapsed_ms": round(elapsed * 1000, 3),
    }
    if extra:
        out.update(extra)
    return out


def cmd_solve(args) -> int:
    eps = _parse_eps(args.eps)
    algo = args.algo
    if algo == "flow-eps" and (eps is None or not 0 < eps < 1):
        raise UsageError("--algo flow-eps needs --eps in (0, 1)")
    if algo == "para" and (eps is None or eps <= 0):
        raise UsageError("--algo para needs --eps > 0")
    if eps is not None and not eps > 0:
        raise UsageError("--eps must be positive")
    H = _read_instance(args)
    algo = _route(H, algo)
    extra = {}
    t0 = time.perf_counter()
    if algo == "flow":
        sol, trace = solve_exact(H)
        if args.trace:
            extra["trace"] = trace.to_dict()
    elif algo == "flow-eps":
        sol, trace = solve_eps(H, eps)
        extra["eps"] = fraction_string(eps)
        if args.trace:
            extra["trace"] = trace.to_dict()
    elif algo == "greedy":
        sol, steps = solve_greedy(H)
        if args.order_csv:
            with open(args.order_csv, "w") as fh:
                fh.write(removal_csv(steps))
        if args.trace:
            extra["trace"] = [{"vertex": s.vertex, "delta": str(s.delta)} for s in steps]
    elif algo == "para":
        sol, _ = solve_para(H, eps)
        extra["eps"] = fraction_string(eps)
    else:
        sol = solve_concave(H)
    elapsed = time.perf_counter() - t0
    if args.dump_network:
        lam = sol.extras["trace"].final_lb if "trace" in sol.extras else sol.density
        with open(args.dump_network, "w") as fh:
            fh.write(build_network(H, lam).to_dimacs())
    _write(args, json.dumps(_report(H, sol, algo, elapsed, extra)) + "\n")
    return 0


def cmd_brute(args) -> int:
    H = _read_instance(args)
    t0 = time.perf_counter()
    res = brute_force(H)
    elapsed = time.perf_counter() - t0
    sol = Solution(res.best_set, res.best_density, "brute", 2**H.n - 1)
    _write(args, json.dumps(_report(H, sol, "brute", elapsed)) + "\n")
    return 0


def cmd_validate(args) -> int:
    H = _read_instance(args)
    shapes = {s.value: 0 for s in Shape}
    for w in H.weights:
        shapes[w.shape.value] += 1
    doc = {"valid": True, "n": H.n, "m": H.m, "p": H.p, "r": H.r,
           "psi": fraction_string(H.psi), "shapes": shapes,
           "all_convex": H.all_convex, "all_concave": H.all_concave}
    _write(args, json.dumps(doc) + "\n")
    return 0


def cmd_gen(args) -> int:
    if args.n < 1 or args.m < 0 or args.max_weight < 0:
        raise UsageError("--n must be >= 1, --m and --max-weight >= 0")
    if not 1 <= args.k <= args.n:
        raise UsageError(f"--k must lie in [1, n]; got k={args.k}, n={args.n}")
    if args.shape == "mixed" and args.m >= 2 and (args.k < 2 or args.max_weight < 1):
        raise UsageError("--shape mixed needs --k >= 2 and --max-weight >= 1")
    H = random_instance(args.seed, args.n, args.m, args.k, args.shape, args.max_weight)
    text = hio.dumps_json(H) + "\n" if args.format == "json" else hio.dumps_text(H)
    _write(args, text)
    return 0


def cmd_export_lp(args) -> int:
    H = _read_instance(args)
    _write(args, export_lp(H, mode=args.mode))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hyperdense",
        description="Densest sub-hypergraph extraction under per-edge weight tables.",
        epilog=ALGO_HELP,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def io_args(p, with_input=True):
        if with_input:
            p.add_argument("--input", "-i", help="instance file (default: stdin)")
            p.add_argument("--format", choices=("text", "json", "auto"), default="auto",
                           help="instance format (default: auto-detect)")
        p.add_argument("--output", "-o", help="output file (default: stdout)")

    p = sub.add_parser("solve", help="run a solver", epilog=ALGO_HELP,
                       formatter_class=argparse.RawDescriptionHelpFormatter)
    io_args(p)
    p.add_argument("--algo", choices=ALGORITHMS, default="auto")
    p.add_argument("--eps", help="accuracy parameter, as num/den or decimal")
    p.add_argument("--trace", action="store_true", help="include the search trace")
    p.add_argument("--order-csv", help="greedy: write the removal order as CSV")
    p.add_argument("--dump-network", help="write the final flow network in DIMACS format")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("brute", help="exhaustive search (n <= 24)")
    io_args(p)
    p.set_defaults(func=cmd_brute)

    p = sub.add_parser("validate", help="parse and validate an instance")
    io_args(p)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("gen", help="generate a random instance")
    io_args(p, with_input=False)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--k", type=int, required=True, help="maximum edge size")
    p.add_argument("--shape", choices=SHAPES, default="convex")
    p.add_argument("--max-weight", type=int, default=9)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("export-lp", help="write the LP model in LP text format")
    io_args(p)
    p.add_argument("--mode", choices=("callback", "full"), default="callback")
    p.set_defaults(func=cmd_export_lp)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except HyperdenseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
