"""Required-phenomena sets for phenomena, artifacts and artifact sets."""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass

from refplan.model import ValidatedSpec


class UnknownPhenomenon(KeyError):
    pass


class UnknownArtifact(KeyError):
    pass


def direct_requirements(spec: ValidatedSpec, p: str) -> frozenset[str]:
    """One expansion step: ``typed(p)`` plus the events causing every
    transition in ``changed_by(p)``."""
    out = set(spec.typed_of(p))
    trans = spec.transition_by_id
    for t in spec.changed_by_of(p):
        out |= trans[t].caused_by
    return frozenset(out)


def _reachable(spec: ValidatedSpec, p: str) -> frozenset[str]:
    # Worklist fixpoint; p itself only shows up when it lies on a cycle.
    seen: set[str] = set()
    stack = list(direct_requirements(spec, p))
    while stack:
        q = stack.pop()
        if q in seen:
            continue
        seen.add(q)
        stack.extend(direct_requirements(spec, q) - seen)
    return frozenset(seen)


@dataclass(frozen=True)
class RequirementClosure:
    req_p: Mapping[str, frozenset[str]]
    req_a: Mapping[str, frozenset[str]]

    @classmethod
    def of(cls, spec: ValidatedSpec) -> RequirementClosure:
        rp = {p.id: _reachable(spec, p.id) for p in spec.phenomena}
        ra = {}
        for a in spec.artifacts:
            acc = set(a.appears)
            for p in a.appears:
                acc |= rp[p]
            ra[a.id] = frozenset(acc)
        return cls(rp, ra)


def closure_of(spec: ValidatedSpec) -> RequirementClosure:
    """Closure for ``spec``, computed once and memoised on the spec object."""
    cached = spec.__dict__.get("_closure")
    if cached is None:
        cached = RequirementClosure.of(spec)
        # Frozen dataclass; bypass __setattr__. Idempotent if raced.
        spec.__dict__["_closure"] = cached
    return cached


def req_p(spec: ValidatedSpec, p: str) -> frozenset[str]:
    try:
        return closure_of(spec).req_p[p]
    except KeyError:
        raise UnknownPhenomenon(p) from None


def req_a(spec: ValidatedSpec, a: str) -> frozenset[str]:
    try:
        return closure_of(spec).req_a[a]
    except KeyError:
        raise UnknownArtifact(a) from None


def req_as(spec: ValidatedSpec, artifacts: Iterable[str]) -> frozenset[str]:
    """Union of :func:`req_a` over ``artifacts``; empty for no artifacts."""
    ra = closure_of(spec).req_a
    out: set[str] = set()
    for a in artifacts:
        if a not in ra:
            raise UnknownArtifact(a)
        out |= ra[a]
    return frozenset(out)
