"""Random valid specs for property and oracle tests."""

from __future__ import annotations

import random

from hypothesis import strategies as st

from refplan.model import Artifact, Phenomenon, PhenomenonKind, ProblemSpec, Transition, validate_spec

KINDS = list(PhenomenonKind)


def random_spec(rng: random.Random, max_artifacts=7, max_phenomena=30, max_transitions=12, min_artifacts=1):
    n_p = rng.randint(1, max_phenomena)
    kinds = [rng.choice(KINDS) for _ in range(n_p)]
    # Make sure events and carrier sets exist so relations can be populated.
    if n_p >= 2:
        kinds[0] = PhenomenonKind.EVENT
        kinds[1] = PhenomenonKind.CARRIER_SET
    phenomena = [Phenomenon(f"p{i}", f"phenomenon {i}", k) for i, k in enumerate(kinds)]
    events = [p.id for p in phenomena if p.kind is PhenomenonKind.EVENT]
    sets = [p.id for p in phenomena if p.kind is PhenomenonKind.CARRIER_SET]
    typables = [p.id for p in phenomena if p.kind in (PhenomenonKind.CONSTANT, PhenomenonKind.VARIABLE)]
    variables = [p.id for p in phenomena if p.kind is PhenomenonKind.VARIABLE]

    transitions = []
    if events:
        for j in range(rng.randint(0, max_transitions)):
            caused = rng.sample(events, rng.randint(1, min(3, len(events))))
            transitions.append(Transition(f"t{j}", f"transition {j}", caused))
    typed = {}
    if sets:
        for p in typables:
            if rng.random() < 0.7:
                typed[p] = rng.sample(sets, rng.randint(1, min(3, len(sets))))
    changed_by = {}
    if transitions:
        for v in variables:
            if rng.random() < 0.7:
                changed_by[v] = rng.sample([t.id for t in transitions], rng.randint(1, min(3, len(transitions))))
    artifacts = []
    for k in range(rng.randint(min_artifacts, max_artifacts)):
        appears = rng.sample([p.id for p in phenomena], rng.randint(1, min(4, n_p)))
        artifacts.append(Artifact(f"a{k}", f"artifact {k}", appears))
    return validate_spec(ProblemSpec(phenomena, transitions, typed, changed_by, artifacts))


@st.composite
def specs(draw, max_artifacts=7, max_phenomena=30, max_transitions=12, min_artifacts=1):
    seed = draw(st.integers(0, 2**32 - 1))
    return random_spec(random.Random(seed), max_artifacts, max_phenomena, max_transitions, min_artifacts)
