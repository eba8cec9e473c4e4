"""Domain types for phenomena, transitions, artifacts and their relations."""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field, fields
from enum import Enum
from functools import cached_property
from types import MappingProxyType


class PhenomenonKind(str, Enum):
    CARRIER_SET = "carrier_set"
    CONSTANT = "constant"
    VARIABLE = "variable"
    EVENT = "event"


class SpecValidationError(ValueError):
    """Base class for structural problems in a problem spec.

    ``ident`` is the offending id and ``relation`` names where it was found
    (``"phenomena"``, ``"typed"``, ``"caused_by"``, ...).
    """

    def __init__(self, ident: str, relation: str, detail: str = "") -> None:
        self.ident = ident
        self.relation = relation
        self.detail = detail
        msg = f"{type(self).__name__}({ident!r}, {relation!r})"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)


class DanglingReference(SpecValidationError):
    pass


class KindViolation(SpecValidationError):
    pass


class DuplicateId(SpecValidationError):
    pass


class EmptyCausedBy(SpecValidationError):
    pass


class EmptyName(SpecValidationError):
    pass


def _frozen_relation(rel: Mapping[str, Iterable[str]] | None) -> Mapping[str, frozenset[str]]:
    rel = rel or {}
    return MappingProxyType({k: frozenset(v) for k, v in rel.items()})


@dataclass(frozen=True)
class Phenomenon:
    id: str
    name: str
    kind: PhenomenonKind


@dataclass(frozen=True)
class Transition:
    id: str
    name: str
    caused_by: frozenset[str]

    def __post_init__(self) -> None:
        object.__setattr__(self, "caused_by", frozenset(self.caused_by))


@dataclass(frozen=True)
class Artifact:
    id: str
    text: str
    appears: frozenset[str]

    def __post_init__(self) -> None:
        object.__setattr__(self, "appears", frozenset(self.appears))


@dataclass(frozen=True, eq=False)
class ProblemSpec:
    """Input to the planner.

    ``typed`` and ``changed_by`` are partial maps; a missing key means the
    empty set. Artifact order is significant: it is the canonical order used
    for expansion and for reporting.
    """

    phenomena: tuple[Phenomenon, ...] = ()
    transitions: tuple[Transition, ...] = ()
    typed: Mapping[str, frozenset[str]] = field(default_factory=dict)
    changed_by: Mapping[str, frozenset[str]] = field(default_factory=dict)
    artifacts: tuple[Artifact, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "phenomena", tuple(self.phenomena))
        object.__setattr__(self, "transitions", tuple(self.transitions))
        object.__setattr__(self, "artifacts", tuple(self.artifacts))
        object.__setattr__(self, "typed", _frozen_relation(self.typed))
        object.__setattr__(self, "changed_by", _frozen_relation(self.changed_by))

    def _key(self):
        # Empty relation entries are semantically absent entries.
        return (
            self.phenomena,
            self.transitions,
            {k: v for k, v in self.typed.items() if v},
            {k: v for k, v in self.changed_by.items() if v},
            self.artifacts,
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ProblemSpec):
            return NotImplemented
        return self._key() == other._key()

    @cached_property
    def phenomenon_by_id(self) -> Mapping[str, Phenomenon]:
        return {p.id: p for p in self.phenomena}

    @cached_property
    def transition_by_id(self) -> Mapping[str, Transition]:
        return {t.id: t for t in self.transitions}

    @cached_property
    def artifact_by_id(self) -> Mapping[str, Artifact]:
        return {a.id: a for a in self.artifacts}

    @cached_property
    def artifact_index(self) -> Mapping[str, int]:
        return {a.id: i for i, a in enumerate(self.artifacts)}

    @property
    def artifact_ids(self) -> tuple[str, ...]:
        return tuple(a.id for a in self.artifacts)

    def kind_of(self, pid: str) -> PhenomenonKind:
        return self.phenomenon_by_id[pid].kind

    def typed_of(self, pid: str) -> frozenset[str]:
        return self.typed.get(pid, frozenset())

    def changed_by_of(self, pid: str) -> frozenset[str]:
        return self.changed_by.get(pid, frozenset())


class ValidatedSpec(ProblemSpec):
    """A :class:`ProblemSpec` that passed :func:`validate_spec`."""


def _check_unique(ids: Iterable[str], relation: str, seen: set[str]) -> None:
    for ident in ids:
        if ident in seen:
            raise DuplicateId(ident, relation)
        seen.add(ident)


def validate_spec(spec: ProblemSpec) -> ValidatedSpec:
    """Check every structural invariant of ``spec``.

    Phenomenon and transition ids share one namespace (both become graph
    nodes); artifact ids have their own. Raises a :class:`SpecValidationError`
    subclass naming the first offending id and relation.
    """
    node_ids: set[str] = set()
    _check_unique((p.id for p in spec.phenomena), "phenomena", node_ids)
    _check_unique((t.id for t in spec.transitions), "transitions", node_ids)
    _check_unique((a.id for a in spec.artifacts), "artifacts", set())

    for p in spec.phenomena:
        if not isinstance(p.kind, PhenomenonKind):
            raise KindViolation(p.id, "phenomena", f"unknown kind {p.kind!r}")
        if not p.name:
            raise EmptyName(p.id, "phenomena")

    phen = spec.phenomenon_by_id
    trans = spec.transition_by_id

    def resolve_phenomenon(ident: str, relation: str) -> Phenomenon:
        if ident in phen:
            return phen[ident]
        if ident in trans:
            raise KindViolation(ident, relation, "transition used where a phenomenon is required")
        raise DanglingReference(ident, relation)

    for t in spec.transitions:
        if not t.caused_by:
            raise EmptyCausedBy(t.id, "caused_by")
        for e in sorted(t.caused_by):
            if resolve_phenomenon(e, "caused_by").kind is not PhenomenonKind.EVENT:
                raise KindViolation(e, "caused_by", f"transition {t.id!r} caused by a non-event")

    for key, targets in spec.typed.items():
        owner = resolve_phenomenon(key, "typed")
        if targets and owner.kind not in (PhenomenonKind.CONSTANT, PhenomenonKind.VARIABLE):
            raise KindViolation(key, "typed", f"{owner.kind.value} cannot be typed")
        for s in sorted(targets):
            if resolve_phenomenon(s, "typed").kind is not PhenomenonKind.CARRIER_SET:
                raise KindViolation(s, "typed", f"{key!r} typed by a non-carrier-set")

    for key, targets in spec.changed_by.items():
        owner = resolve_phenomenon(key, "changed_by")
        if targets and owner.kind is not PhenomenonKind.VARIABLE:
            raise KindViolation(key, "changed_by", f"{owner.kind.value} cannot be changed")
        for t in sorted(targets):
            if t not in trans:
                if t in phen:
                    raise KindViolation(t, "changed_by", "phenomenon used where a transition is required")
                raise DanglingReference(t, "changed_by")

    for a in spec.artifacts:
        for p in sorted(a.appears):
            resolve_phenomenon(p, "appears")

    if isinstance(spec, ValidatedSpec):
        return spec
    return ValidatedSpec(**{f.name: getattr(spec, f.name) for f in fields(spec)})
