"""Spec file parsing, plan reports and dependency-graph export."""

from __future__ import annotations

import json
from collections import Counter
from typing import Any

import jsonschema

from refplan.closure import closure_of
from refplan.model import (
    Artifact,
    Phenomenon,
    PhenomenonKind,
    ProblemSpec,
    Transition,
    ValidatedSpec,
    validate_spec,
)
from refplan.search import PlannedOrder, PlanResult, RankRow

_ID_LIST = {"type": "array", "items": {"type": "string", "minLength": 1}}

SPEC_SCHEMA: dict[str, Any] = {
    "type": "object",
    "required": ["phenomena", "transitions", "artifacts"],
    "additionalProperties": False,
    "properties": {
        "phenomena": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["id", "name", "kind"],
                "additionalProperties": False,
                "properties": {
                    "id": {"type": "string", "minLength": 1},
                    "name": {"type": "string", "minLength": 1},
                    "kind": {"enum": [k.value for k in PhenomenonKind]},
                },
            },
        },
        "transitions": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["id", "name", "caused_by"],
                "additionalProperties": False,
                "properties": {
                    "id": {"type": "string", "minLength": 1},
                    "name": {"type": "string"},
                    "caused_by": _ID_LIST,
                },
            },
        },
        "typed": {"type": "object", "additionalProperties": _ID_LIST},
        "changed_by": {"type": "object", "additionalProperties": _ID_LIST},
        "artifacts": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["id", "text", "appears"],
                "additionalProperties": False,
                "properties": {
                    "id": {"type": "string", "minLength": 1},
                    "text": {"type": "string"},
                    "appears": _ID_LIST,
                },
            },
        },
    },
}


class SpecSyntaxError(ValueError):
    def __init__(self, msg: str, line: int, column: int) -> None:
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {msg}")


class SchemaError(ValueError):
    def __init__(self, msg: str, path: str) -> None:
        self.path = path
        super().__init__(f"{path}: {msg}")


def _json_path(parts) -> str:
    out = "$"
    for p in parts:
        out += f"[{p}]" if isinstance(p, int) else f".{p}"
    return out


def parse_spec(document: str) -> ProblemSpec:
    """Parse a JSON spec document. Structural validation is separate."""
    try:
        raw = json.loads(document)
    except json.JSONDecodeError as e:
        raise SpecSyntaxError(e.msg, e.lineno, e.colno) from None
    validator = jsonschema.Draft202012Validator(SPEC_SCHEMA)
    errors = sorted(validator.iter_errors(raw), key=lambda e: list(e.absolute_path))
    if errors:
        err = jsonschema.exceptions.best_match(errors)
        raise SchemaError(err.message, _json_path(err.absolute_path))
    return ProblemSpec(
        phenomena=[Phenomenon(p["id"], p["name"], PhenomenonKind(p["kind"])) for p in raw["phenomena"]],
        transitions=[Transition(t["id"], t["name"], t["caused_by"]) for t in raw["transitions"]],
        typed=raw.get("typed", {}),
        changed_by=raw.get("changed_by", {}),
        artifacts=[Artifact(a["id"], a["text"], a["appears"]) for a in raw["artifacts"]],
    )


def load_spec(document: str) -> ValidatedSpec:
    return validate_spec(parse_spec(document))


def _ordered(ids, position: dict[str, int]) -> list[str]:
    return sorted(ids, key=lambda i: (position.get(i, len(position)), i))


def _positions(spec: ProblemSpec) -> dict[str, int]:
    ids = [p.id for p in spec.phenomena] + [t.id for t in spec.transitions]
    return {i: n for n, i in enumerate(ids)}


def dump_spec(spec: ProblemSpec) -> str:
    """Serialize ``spec`` back to the JSON document format."""
    pos = _positions(spec)
    doc = {
        "phenomena": [{"id": p.id, "name": p.name, "kind": p.kind.value} for p in spec.phenomena],
        "transitions": [
            {"id": t.id, "name": t.name, "caused_by": _ordered(t.caused_by, pos)} for t in spec.transitions
        ],
        "typed": {k: _ordered(v, pos) for k, v in spec.typed.items() if v},
        "changed_by": {k: _ordered(v, pos) for k, v in spec.changed_by.items() if v},
        "artifacts": [{"id": a.id, "text": a.text, "appears": _ordered(a.appears, pos)} for a in spec.artifacts],
    }
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def spec_summary(spec: ValidatedSpec) -> dict[str, Any]:
    counts = Counter(p.kind for p in spec.phenomena)
    return {
        "phenomena": {k.value: counts.get(k, 0) for k in PhenomenonKind},
        "transitions": len(spec.transitions),
        "artifacts": len(spec.artifacts),
    }


def req_a_listing(spec: ValidatedSpec) -> dict[str, list[str]]:
    pos = _positions(spec)
    ra = closure_of(spec).req_a
    return {a.id: _ordered(ra[a.id], pos) for a in spec.artifacts}


def _tup(xs) -> str:
    return "(" + ", ".join(str(x) for x in xs) + ")"


def _table(header: list[str], rows: list[list[str]]) -> str:
    widths = [max(len(r[i]) for r in [header, *rows]) for i in range(len(header))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in [header, *rows]]
    return "\n".join(lines) + "\n"


def emit_closure(spec: ValidatedSpec, fmt: str = "table") -> str:
    listing = req_a_listing(spec)
    if fmt == "json":
        return json.dumps({"req_a": listing}, indent=2) + "\n"
    return _table(["artifact", "req_a"], [[a, "{" + ", ".join(ps) + "}"] for a, ps in listing.items()])


def emit_summary(spec: ValidatedSpec, fmt: str = "table") -> str:
    summary = spec_summary(spec)
    if fmt == "json":
        return json.dumps({"valid": True, "summary": summary}, indent=2) + "\n"
    kinds = ", ".join(f"{k}={n}" for k, n in summary["phenomena"].items())
    return (
        f"valid: {sum(summary['phenomena'].values())} phenomena ({kinds}), "
        f"{summary['transitions']} transitions, {summary['artifacts']} artifacts\n"
    )


def plan_result_to_dict(result: PlanResult) -> dict[str, Any]:
    return {
        "orders": [{"order": list(o.order), "nums": list(o.nums), "snums": list(o.snums)} for o in result.orders],
        "rank_table": None
        if result.rank_table is None
        else [{"order": list(r.order), "nums": list(r.nums), "rank": r.rank} for r in result.rank_table],
    }


def plan_result_from_dict(doc: dict[str, Any]) -> PlanResult:
    orders = tuple(PlannedOrder(tuple(o["order"]), tuple(o["nums"])) for o in doc["orders"])
    table = doc.get("rank_table")
    if table is not None:
        table = tuple(RankRow(tuple(r["order"]), tuple(r["nums"]), r["rank"]) for r in table)
    return PlanResult(orders, table)


def emit_plan_report(result: PlanResult, fmt: str = "table", spec: ValidatedSpec | None = None) -> str:
    """Render ``result`` as a table (order, nums, rank) or as JSON.

    Without a rank table the returned orders are all rank 1. Passing
    ``spec`` adds the spec summary and per-artifact req_a listing.
    """
    if fmt == "json":
        doc = plan_result_to_dict(result)
        if spec is not None:
            doc = {"summary": spec_summary(spec), "req_a": req_a_listing(spec), **doc}
        return json.dumps(doc, indent=2) + "\n"
    if fmt != "table":
        raise ValueError(f"unknown format {fmt!r}")
    if result.rank_table is not None:
        rows = [[_tup(r.order), _tup(r.nums), str(r.rank)] for r in result.rank_table]
    else:
        rows = [[_tup(o.order), _tup(o.nums), "1"] for o in result.orders]
    out = _table(["order", "nums", "rank"], rows)
    if spec is not None:
        out = emit_closure(spec, "table") + "\n" + out
    return out


def read_plan_report(text: str) -> PlanResult:
    return plan_result_from_dict(json.loads(text))


_KIND_STYLE = {
    PhenomenonKind.CARRIER_SET: ("carrier sets", "box"),
    PhenomenonKind.CONSTANT: ("constants", "diamond"),
    PhenomenonKind.VARIABLE: ("variables", "ellipse"),
    PhenomenonKind.EVENT: ("events", "hexagon"),
}


def _q(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"').replace("\n", "\\n") + '"'


def emit_dependency_graph(spec: ValidatedSpec) -> str:
    """DOT digraph of the typed / changed_by / caused_by relations.

    Phenomena are clustered by kind, transitions get their own cluster.
    Nodes and edges follow the input order, so output is byte-stable.
    """
    pos = _positions(spec)
    lines = ["digraph requirements {", "  rankdir=LR;"]
    for kind, (label, shape) in _KIND_STYLE.items():
        members = [p for p in spec.phenomena if p.kind is kind]
        if not members:
            continue
        lines.append(f"  subgraph cluster_{kind.value} {{")
        lines.append(f"    label={_q(label)};")
        for p in members:
            lines.append(f"    {_q(p.id)} [label={_q(p.id + ': ' + p.name)}, shape={shape}];")
        lines.append("  }")
    if spec.transitions:
        lines.append("  subgraph cluster_transition {")
        lines.append(f"    label={_q('transitions')};")
        for t in spec.transitions:
            lines.append(f"    {_q(t.id)} [label={_q(t.id + ': ' + t.name)}, shape=plaintext];")
        lines.append("  }")
    for p in spec.phenomena:
        for s in _ordered(spec.typed_of(p.id), pos):
            lines.append(f"  {_q(p.id)} -> {_q(s)} [label=typed];")
    for p in spec.phenomena:
        for t in _ordered(spec.changed_by_of(p.id), pos):
            lines.append(f"  {_q(p.id)} -> {_q(t)} [label=changed_by];")
    for t in spec.transitions:
        for e in _ordered(t.caused_by, pos):
            lines.append(f"  {_q(t.id)} -> {_q(e)} [label=caused_by];")
    lines.append("}")
    return "\n".join(lines) + "\n"
