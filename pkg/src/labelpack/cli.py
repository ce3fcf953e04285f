"""Command-line front end: construct, verify, bounds, table, oracle,
search-counterexample, export.

Exit status contract: 0 success, 1 semantic failure (invalid packing),
2 usage or out-of-range parameters, 3 impossible (excluded) instance.
Machine-parseable results go to stdout, one line per record; human-oriented
notes go to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import bounds as bnd
from .constructions import (
    classify_cycle_case,
    construct_circuit_packing,
    construct_cycle_packing,
)
from .errors import (
    CertificateError,
    ExcludedInstanceError,
    NoPlacementError,
    RangeError,
)
from .model import LabeledPacking, dot_documents
from .oracle import SearchBudget, guided_counterexample_search, lambda_exact
from .verifier import verify


@dataclass(frozen=True)
class BoundReport:
    """Everything the bounds command knows about one instance."""

    kind: str
    n: int
    k: int
    x: int
    m: int
    lower: int | None
    upper_closed: bnd.ClosedBound | None
    upper_partition: int
    partition_witness: tuple[int, ...]
    exact: tuple[int, str] | None

    def to_json_dict(self) -> dict:
        return {
            "kind": self.kind,
            "n": self.n,
            "k": self.k,
            "x": self.x,
            "m": self.m,
            "lower": self.lower,
            "upper_closed": (
                None if self.upper_closed is None
                else {"value": self.upper_closed.value, "rule": self.upper_closed.rule}),
            "upper_partition": self.upper_partition,
            "partition_witness": list(self.partition_witness),
            "exact": (None if self.exact is None
                      else {"value": self.exact[0], "rule": self.exact[1]}),
        }


def cycle_bound_report(k: int, x: int, q: int | None = None) -> BoundReport:
    n = 2 * k + x
    part = bnd.partition_bound(n, k)
    return BoundReport(
        kind="cycle", n=n, k=k, x=x, m=1,
        lower=bnd.cycle_lower_bound(k, x),
        upper_closed=bnd.cycle_closed_upper(k, x, q=q),
        upper_partition=part.p_max,
        partition_witness=part.witness,
        exact=bnd.lambda_known(n, k),
    )


def circuit_bound_report(k: int, x: int, q: int | None = None) -> BoundReport:
    n = k + x
    if x < 1:
        raise RangeError(f"circuit bounds need x >= 1, got {x}")
    if (x, n) in ((1, 4), (1, 6)):
        raise ExcludedInstanceError(f"circuit instance (x={x}, n={n}) admits no placement")
    part = bnd.partition_bound(n, k, directed=True)
    exact = bnd.lambda_known(n, k, directed=True) if n >= 3 else None
    if n >= 2 * k:
        lower = exact[0] if exact else None
        upper_closed = None
    else:
        lower = x + 1 if k % 2 == 0 else (x if x >= 2 else 1)
        upper_closed = bnd.circuit_closed_upper(k, x, q=q)
    return BoundReport(
        kind="circuit", n=n, k=k, x=x, m=max(1, n // (2 * k)),
        lower=lower,
        upper_closed=upper_closed,
        upper_partition=part.p_max,
        partition_witness=part.witness,
        exact=exact,
    )


def _write_out(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text if text.endswith("\n") else text + "\n")
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")


def _budget_from_args(args: argparse.Namespace) -> SearchBudget:
    return SearchBudget(max_nodes=args.max_nodes, max_seconds=args.max_seconds)


def _add_budget_flags(sub: argparse.ArgumentParser, nodes: int, seconds: float) -> None:
    sub.add_argument("--max-nodes", type=int, default=nodes)
    sub.add_argument("--max-seconds", type=float, default=seconds)


def cmd_construct(args: argparse.Namespace) -> int:
    if args.kind == "cycle":
        if args.x is None:
            raise RangeError("construct cycle needs --x")
        lp = construct_cycle_packing(args.k, args.x)
        tag = classify_cycle_case(args.k, args.x).value
    else:
        if args.n is None:
            if args.x is None:
                raise RangeError("construct circuit needs --n or --x")
            args.n = args.k + args.x
        lp, tag = construct_circuit_packing(args.k, args.n)
    if args.out:
        _write_out(lp.to_json(), args.out)
    else:
        print(lp.to_json())
    print(f"n={lp.n} p={lp.label_count} case={tag}")
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    try:
        with open(args.infile, "r", encoding="utf-8") as fh:
            lp = LabeledPacking.from_json(fh.read())
    except OSError as exc:
        raise CertificateError(f"cannot read {args.infile}: {exc}") from exc
    report = verify(lp)
    print(json.dumps(report.to_json_dict(), separators=(",", ":")))
    return 0 if report.valid else 1


def cmd_bounds(args: argparse.Namespace) -> int:
    if args.kind == "cycle":
        report = cycle_bound_report(args.k, args.x, q=args.q)
    else:
        report = circuit_bound_report(args.k, args.x, q=args.q)
    record = report.to_json_dict()
    if args.oracle:
        result = lambda_exact(report.n, report.k, directed=args.kind == "circuit",
                              budget=_budget_from_args(args))
        record["oracle"] = {"outcome": result.outcome, "p": result.p,
                            "nodes": result.nodes}
    print(json.dumps(record, separators=(",", ":")))
    return 0


def cmd_table(args: argparse.Namespace) -> int:
    rows = bnd.table1(args.k_max, threads=args.threads)
    if args.format == "csv":
        lines = ["k,x,n,p_max"]
        lines += [f"{r.k},{r.x},{r.n},{r.p_max}" for r in rows]
        _write_out("\n".join(lines), args.out)
    else:
        payload = [{"k": r.k, "x": r.x, "n": r.n, "p_max": r.p_max} for r in rows]
        _write_out(json.dumps(payload, separators=(",", ":")), args.out)
    print(f"rows={len(rows)}", file=sys.stderr)
    return 0


def cmd_oracle(args: argparse.Namespace) -> int:
    result = lambda_exact(args.n, args.k, directed=args.kind == "circuit",
                          budget=_budget_from_args(args))
    print(f"outcome={result.outcome} p={result.p} nodes={result.nodes}")
    if args.out and result.witness is not None:
        _write_out(result.witness.to_json(), args.out)
    return 0


def cmd_search_counterexample(args: argparse.Namespace) -> int:
    result = guided_counterexample_search(_budget_from_args(args), seed=args.seed)
    print(f"outcome={result.outcome} nodes={result.nodes}")
    if result.found:
        report = verify(result.witness)
        print(f"p={result.witness.label_count} valid={report.valid}")
        if args.out:
            _write_out(result.witness.to_json(), args.out)
    return 0


def cmd_export(args: argparse.Namespace) -> int:
    try:
        with open(args.infile, "r", encoding="utf-8") as fh:
            lp = LabeledPacking.from_json(fh.read())
    except OSError as exc:
        raise CertificateError(f"cannot read {args.infile}: {exc}") from exc
    if args.format != "dot":
        raise RangeError(f"unsupported export format {args.format!r}")
    _write_out("\n".join(dot_documents(lp)), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="labelpack",
        description="Labeled packings of cycles and circuits: construct, "
                    "verify, bound, search, export.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a packing certificate")
    p.add_argument("kind", choices=("cycle", "circuit"))
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--x", type=int, default=None)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="check a packing certificate")
    p.add_argument("--in", dest="infile", required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bounds", help="report bounds for one instance")
    p.add_argument("kind", choices=("cycle", "circuit"))
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--x", type=int, required=True)
    p.add_argument("--q", type=int, default=None)
    p.add_argument("--oracle", action="store_true")
    _add_budget_flags(p, nodes=50_000_000, seconds=300.0)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("table", help="reproduce the unresolved-instance table")
    p.add_argument("--k-max", type=int, required=True)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out", default=None)
    p.add_argument("--threads", type=int, default=None)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("oracle", help="exact packing number by exhaustive search")
    p.add_argument("kind", choices=("cycle", "circuit"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--out", default=None)
    _add_budget_flags(p, nodes=50_000_000, seconds=600.0)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("search-counterexample",
                       help="hunt for the 7-label packing of 9 copies of the order-21 cycle")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default=None)
    _add_budget_flags(p, nodes=100_000_000, seconds=3600.0)
    p.set_defaults(func=cmd_search_counterexample)

    p = sub.add_parser("export", help="write one DOT graph per copy")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--format", choices=("dot",), default="dot")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_export)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ExcludedInstanceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (RangeError, CertificateError, NoPlacementError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
