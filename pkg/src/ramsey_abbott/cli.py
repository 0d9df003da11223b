"""Command-line interface.

Exit status: 0 success / bound holds, 1 usage or parse error, 2 the request
was well-formed but failed (bound violated, search exhausted, impossible
parameters). JSON goes to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import __version__
from .abbott import abbott_power, abbott_product
from .construct import construct_ramsey, provenance, verify_construction
from .errors import CapacityError, GraphFormatError, GraphValidationError, ParameterError, SearchExhausted
from .extremal import verify_bounds
from .formats import FORMATS, decode, encode
from .graph import DEFAULT_MAX_BITS
from .sample_space import (
    ENUMERATION_LIMIT,
    all_subset_biases,
    derive_spec,
    make_spec,
    measure_bias,
    relaxed_spec,
    uniform_spec,
)
from .search import METHODS, find_base_graph

EXIT_OK, EXIT_USAGE, EXIT_FAILED = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _emit(doc: dict) -> None:
    sys.stdout.write(json.dumps(doc, indent=2, sort_keys=True) + "\n")


def _read(path: str, fmt: str):
    if path == "-":
        data = sys.stdin.buffer.read()
    else:
        with open(path, "rb") as f:
            data = f.read()
    return decode(data, fmt)


def _write_graph(g, fmt: str, output, doc: dict) -> None:
    """Write the graph to ``output``, or embed it in the JSON record when no path is given."""
    data = encode(g, fmt)
    if output:
        with open(output, "wb") as f:
            f.write(data)
        doc["output"] = output
    else:
        doc["graph"] = data.decode("ascii")


def _threads(args) -> int:
    return args.threads if args.threads else (os.cpu_count() or 1)


def _space(args, k: int):
    if args.spec == "faithful":
        return derive_spec(k)
    if args.t is not None or args.delta_log2 is not None or args.r is not None:
        return make_spec(k * (k - 1) // 2, args.t or 2, args.delta_log2 or 1, k=k, r=args.r,
                         relaxed=True)
    return relaxed_spec(k)


def cmd_construct(args) -> int:
    if args.n < 16:
        raise UsageError(f"--n must be at least 16, got {args.n}")
    if args.epsilon <= 0:
        raise UsageError("--epsilon must be positive")
    result = construct_ramsey(
        args.n, args.epsilon, k=args.k, l=args.l, base_bound=args.bound, method=args.method,
        spec=args.spec, cap=args.cap, workers=_threads(args), max_bits=args.max_bits,
    )
    report = None
    if args.verify != "none":
        report = verify_construction(result, args.verify)
    doc = provenance(result, args.format, report, args.verify)
    _write_graph(result.graph, args.format, args.output, doc)
    _emit(doc)
    return EXIT_OK if report is None or report.passed else EXIT_FAILED


def cmd_verify(args) -> int:
    g = _read(args.input, args.format)
    if args.bound < 2:
        raise UsageError("--bound must be >= 2")
    report = verify_bounds(g, args.bound, args.mode)
    doc = {"input": args.input, "order": g.order, "edges": g.edge_count()}
    doc.update(report.to_dict())
    _emit(doc)
    return EXIT_OK if report.passed else EXIT_FAILED


def cmd_product(args) -> int:
    g = _read(args.left, args.format)
    h = _read(args.right, args.format)
    p = abbott_product(g, h, max_bits=args.max_bits)
    doc = {"left_order": g.order, "right_order": h.order, "order": p.order,
           "edges": p.edge_count(), "format": args.format}
    _write_graph(p, args.format, args.output, doc)
    _emit(doc)
    return EXIT_OK


def cmd_power(args) -> int:
    if args.l < 1:
        raise UsageError("--l must be >= 1")
    g = _read(args.input, args.format)
    p = abbott_power(g, args.l, max_bits=args.max_bits)
    doc = {"base_order": g.order, "l": args.l, "order": p.order, "edges": p.edge_count(),
           "format": args.format}
    _write_graph(p, args.format, args.output, doc)
    _emit(doc)
    return EXIT_OK


def cmd_base_graph(args) -> int:
    if args.k < 2:
        raise UsageError("--k must be >= 2")
    space = _space(args, args.k) if args.method == "enumeration" else None
    try:
        outcome = find_base_graph(args.k, args.bound, args.method, space, args.cap,
                                  _threads(args), args.prng_seed)
    except SearchExhausted as e:
        print(f"search exhausted: {e}", file=sys.stderr)
        _emit({"status": "search-exhausted", "k": args.k, "bound": args.bound,
               "seeds_tried": e.seeds_tried})
        return EXIT_FAILED
    except ParameterError as e:
        print(f"impossible parameters: {e}", file=sys.stderr)
        _emit({"status": "parameter-error", "k": args.k, "bound": args.bound,
               "estimator": None if e.estimator is None else str(e.estimator)})
        return EXIT_FAILED
    doc = {"status": "ok", "tool": "ramsey-abbott", "version": __version__}
    doc.update(outcome.to_dict())
    _write_graph(outcome.graph, args.format, args.output, doc)
    _emit(doc)
    return EXIT_OK


def _parse_subset(text: str) -> list[int]:
    try:
        items = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"--subset must be comma-separated positions, got {text!r}") from None
    if not items:
        raise UsageError("--subset must name at least one position")
    return items


def cmd_bias(args) -> int:
    if args.uniform:
        spec = uniform_spec(args.m)
    else:
        spec = make_spec(args.m, args.t, args.delta_log2, r=args.r)
    if spec.seed_bits > args.limit:
        raise CapacityError(f"{spec.seed_bits} seed bits exceeds --limit {args.limit}")
    doc = {"spec": spec.to_dict(), "epsilon": str(spec.epsilon),
           "epsilon_float": float(spec.epsilon), "seeds": 1 << spec.seed_bits}
    if args.all_subsets:
        biases = all_subset_biases(spec)[1:]
        worst = max(biases)
        doc.update({"subsets": len(biases), "max_bias": worst})
    else:
        if args.subset is None:
            raise UsageError("give --subset or --all-subsets")
        subset = _parse_subset(args.subset)
        if max(subset) >= spec.m or min(subset) < 0:
            raise UsageError(f"--subset positions must lie in 0..{spec.m - 1}")
        worst = measure_bias(spec, subset)
        doc.update({"subset": sorted(set(subset)), "bias": worst})
    doc["passed"] = worst <= spec.epsilon
    _emit(doc)
    return EXIT_OK if doc["passed"] else EXIT_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ramsey-abbott",
                     description="Explicit Ramsey graphs from Abbott powers of a searched base graph.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, threads=False):
        p.add_argument("--format", choices=FORMATS + ("adjacency-bits",), default="bits")
        p.add_argument("--max-bits", type=int, default=DEFAULT_MAX_BITS,
                       help="adjacency-matrix budget in bits")
        if threads:
            p.add_argument("--threads", type=int, default=0,
                           help="worker processes (default: all cores)")

    def space_flags(p):
        p.add_argument("--method", choices=METHODS, default="enumeration")
        p.add_argument("--spec", choices=("relaxed", "faithful"), default="relaxed",
                       help="sample-space parameters for enumeration")
        p.add_argument("--cap", type=int, help="maximum number of seeds to try")

    p = sub.add_parser("construct", help="build an n-vertex Ramsey graph")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--epsilon", type=float, default=1.0)
    p.add_argument("--k", type=int, help="override base-graph order")
    p.add_argument("--l", type=int, help="override power")
    p.add_argument("--bound", type=int, help="override base bound (default 3*ceil(log2 k))")
    p.add_argument("--output")
    p.add_argument("--verify", choices=("none", "decision", "exact"), default="none")
    space_flags(p)
    common(p, threads=True)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="check omega, alpha < bound")
    p.add_argument("--input", required=True)
    p.add_argument("--bound", type=int, required=True)
    p.add_argument("--mode", choices=("exact", "decision"), default="exact")
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("product", help="Abbott product of two graphs")
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)
    p.add_argument("--output")
    common(p)
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("power", help="Abbott power of a graph")
    p.add_argument("--input", required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--output")
    common(p)
    p.set_defaults(func=cmd_power)

    p = sub.add_parser("base-graph", help="search for a k-vertex base graph")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--bound", type=int, help="default 3*ceil(log2 k)")
    p.add_argument("--t", type=int, help="relaxed independence order")
    p.add_argument("--delta-log2", type=int, help="relaxed closeness, delta = 2^-value")
    p.add_argument("--r", type=int, help="field degree override")
    p.add_argument("--prng-seed", type=int, default=0)
    p.add_argument("--output")
    space_flags(p)
    common(p, threads=True)
    p.set_defaults(func=cmd_base_graph)

    p = sub.add_parser("bias", help="measure small-bias of the sample space exhaustively")
    p.add_argument("--m", type=int, required=True, help="string length")
    p.add_argument("--t", type=int, default=2)
    p.add_argument("--delta-log2", type=int, default=1)
    p.add_argument("--r", type=int, help="field degree override")
    p.add_argument("--uniform", action="store_true", help="identity generator baseline")
    p.add_argument("--subset", help="comma-separated positions")
    p.add_argument("--all-subsets", action="store_true")
    p.add_argument("--limit", type=int, default=ENUMERATION_LIMIT,
                   help="maximum seed bits to enumerate")
    p.set_defaults(func=cmd_bias)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as e:
        parser.print_usage(sys.stderr)
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (GraphFormatError, GraphValidationError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except CapacityError as e:
        print(f"capacity error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (SearchExhausted, ParameterError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_FAILED
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
