"""Refinement strategy planning for Event-B.

Given phenomena, transitions, their typing/changing/causing relations and a
list of artifacts, compute what each artifact requires and find the artifact
introduction orders that spread newly introduced phenomena most evenly.
"""

from refplan.closure import RequirementClosure, req_a, req_as, req_p
from refplan.effectiveness import (
    Effectiveness,
    NumsHistory,
    compare_effectiveness,
    intro_phenomena,
    nums_history,
)
from refplan.io import dump_spec, emit_dependency_graph, emit_plan_report, load_spec, parse_spec
from refplan.model import (
    Artifact,
    Phenomenon,
    PhenomenonKind,
    ProblemSpec,
    Transition,
    ValidatedSpec,
    validate_spec,
)
from refplan.search import (
    PlannedOrder,
    PlanResult,
    RankRow,
    SearchNode,
    brute_force_best_orders,
    certainly_better,
    rank_all_orders,
    search_best_orders,
)

__all__ = [
    "Artifact",
    "Effectiveness",
    "NumsHistory",
    "Phenomenon",
    "PhenomenonKind",
    "PlanResult",
    "PlannedOrder",
    "ProblemSpec",
    "RankRow",
    "RequirementClosure",
    "SearchNode",
    "Transition",
    "ValidatedSpec",
    "brute_force_best_orders",
    "certainly_better",
    "compare_effectiveness",
    "dump_spec",
    "emit_dependency_graph",
    "emit_plan_report",
    "intro_phenomena",
    "load_spec",
    "nums_history",
    "parse_spec",
    "rank_all_orders",
    "req_a",
    "req_as",
    "req_p",
    "search_best_orders",
    "validate_spec",
]
