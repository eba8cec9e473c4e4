"""Command-line entry point: ``refplan {validate,closure,plan,rank,graph} FILE``."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from refplan.effectiveness import Effectiveness, compare_effectiveness
from refplan.io import (
    SchemaError,
    SpecSyntaxError,
    emit_closure,
    emit_dependency_graph,
    emit_plan_report,
    emit_summary,
    load_spec,
)
from refplan.model import SpecValidationError, ValidatedSpec
from refplan.search import (
    DEFAULT_MAX_ENUMERATE,
    NoArtifacts,
    PlanResult,
    TooManyArtifacts,
    brute_force_best_orders,
    rank_all_orders,
    search_best_orders,
    total_phenomena,
)

EXIT_OK = 0
EXIT_IO = 1
EXIT_SYNTAX = 2
EXIT_VALIDATION = 3
EXIT_ENUMERATION = 4
EXIT_INVARIANT = 5


class InvariantBreach(RuntimeError):
    pass


def _check_result(spec: ValidatedSpec, result: PlanResult) -> None:
    n_phen = total_phenomena(spec)
    first = result.orders[0].nums if result.orders else None
    for o in result.orders:
        if sorted(o.order) != sorted(spec.artifact_ids):
            raise InvariantBreach(f"order {o.order} is not a permutation of the artifacts")
        if sum(o.nums) != n_phen:
            raise InvariantBreach(f"order {o.order} introduces {sum(o.nums)} phenomena, expected {n_phen}")
        if compare_effectiveness(o.nums, first) is not Effectiveness.EQUAL:
            raise InvariantBreach(f"order {o.order} is not in the best class")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="refplan", description="Plan artifact introduction orders for Event-B refinement.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, help: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help)
        p.add_argument("file", type=Path, help="spec document (JSON)")
        p.add_argument("--format", choices=["table", "json"], default="table")
        return p

    add("validate", "check the spec and print a summary")
    add("closure", "print req_a for every artifact")
    plan = add("plan", "find the most effective orders with the pruned search")
    plan.add_argument("--oracle", action="store_true", help="use exhaustive enumeration instead")
    plan.add_argument("--max-enumerate", type=int, default=DEFAULT_MAX_ENUMERATE, metavar="N")
    rank = add("rank", "rank every introduction order")
    rank.add_argument("--max-enumerate", type=int, default=DEFAULT_MAX_ENUMERATE, metavar="N")
    add("graph", "emit the dependency graph as DOT")
    return parser


def run(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        spec = load_spec(args.file.read_text(encoding="utf-8"))
        if args.command == "validate":
            out = emit_summary(spec, args.format)
        elif args.command == "closure":
            out = emit_closure(spec, args.format)
        elif args.command == "graph":
            out = emit_dependency_graph(spec)
        else:
            if args.command == "rank":
                result = rank_all_orders(spec, args.max_enumerate)
            elif args.oracle:
                result = brute_force_best_orders(spec, args.max_enumerate)
                result = PlanResult(result.orders)
            else:
                result = search_best_orders(spec)
            _check_result(spec, result)
            out = emit_plan_report(result, args.format, spec if args.format == "json" else None)
    except (SpecSyntaxError, SchemaError) as e:
        print(f"refplan: {args.file}: {e}", file=sys.stderr)
        return EXIT_SYNTAX
    except (SpecValidationError, NoArtifacts) as e:
        print(f"refplan: {args.file}: {e}", file=sys.stderr)
        return EXIT_VALIDATION
    except TooManyArtifacts as e:
        print(f"refplan: {e} (raise with --max-enumerate)", file=sys.stderr)
        return EXIT_ENUMERATION
    except InvariantBreach as e:
        print(f"refplan: internal invariant breach: {e}", file=sys.stderr)
        return EXIT_INVARIANT
    except OSError as e:
        print(f"refplan: {e}", file=sys.stderr)
        return EXIT_IO
    sys.stdout.write(out)
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
