"""Search for the most effective artifact introduction orders.

:func:`search_best_orders` is the pruned breadth-first search;
:func:`brute_force_best_orders` enumerates every permutation and serves as
its oracle.
"""

from __future__ import annotations

import itertools
from collections.abc import Sequence
from dataclasses import dataclass

from refplan.closure import req_a, req_as
from refplan.effectiveness import effectiveness_key, nums_history
from refplan.model import ValidatedSpec

DEFAULT_MAX_ENUMERATE = 9


class NoArtifacts(ValueError):
    pass


class TooManyArtifacts(ValueError):
    def __init__(self, n_artif: int, limit: int) -> None:
        self.n_artif = n_artif
        self.limit = limit
        super().__init__(f"{n_artif} artifacts exceed the enumeration limit of {limit}")


@dataclass(frozen=True)
class SearchNode:
    as_: tuple[str, ...]
    ps: frozenset[str]
    nums: tuple[int, ...]
    max: int
    rest: int

    @classmethod
    def root(cls, n_phen: int) -> SearchNode:
        return cls((), frozenset(), (), 0, n_phen)

    @classmethod
    def from_nums(cls, nums: Sequence[int], rest: int) -> SearchNode:
        """Bare node carrying only what :func:`certainly_better` looks at."""
        nums = tuple(nums)
        return cls((), frozenset(), nums, max(nums, default=0), rest)

    def child(self, spec: ValidatedSpec, a: str, n_phen: int) -> SearchNode:
        ps = self.ps | req_a(spec, a)
        nums = self.nums + (len(ps) - len(self.ps),)
        return SearchNode(self.as_ + (a,), ps, nums, max(nums), n_phen - sum(nums))


def _signature(node: SearchNode) -> tuple[int, ...]:
    return tuple(sorted(node.nums, reverse=True))


def _drop_one(nums: tuple[int, ...], value: int) -> tuple[int, ...]:
    i = nums.index(value)
    return nums[:i] + nums[i + 1 :]


def certainly_better(maybe_better: SearchNode, maybe_worse: SearchNode) -> bool:
    """True when every completion of ``maybe_better`` beats every completion
    of ``maybe_worse``. Conservative: False means "not sure"."""
    b_nums, b_max = maybe_better.nums, maybe_better.max
    w_nums, w_max = maybe_worse.nums, maybe_worse.max
    rest = maybe_better.rest
    while True:
        if not b_nums or not w_nums:
            return False
        if max(b_max, rest) < w_max:
            return True
        if b_max != w_max:
            return False
        # Multiset difference: strip a single occurrence of the shared max.
        b_nums = _drop_one(b_nums, b_max)
        w_nums = _drop_one(w_nums, w_max)
        b_max = max(b_nums, default=0)
        w_max = max(w_nums, default=0)


@dataclass(frozen=True)
class PlannedOrder:
    order: tuple[str, ...]
    nums: tuple[int, ...]

    @property
    def snums(self) -> tuple[int, ...]:
        return tuple(sorted(self.nums, reverse=True))


@dataclass(frozen=True)
class RankRow:
    order: tuple[str, ...]
    nums: tuple[int, ...]
    rank: int


@dataclass(frozen=True)
class PlanResult:
    orders: tuple[PlannedOrder, ...]
    rank_table: tuple[RankRow, ...] | None = None


def total_phenomena(spec: ValidatedSpec) -> int:
    return len(req_as(spec, spec.artifact_ids))


def _canonical(spec: ValidatedSpec, order: Sequence[str]) -> tuple[int, ...]:
    idx = spec.artifact_index
    return tuple(idx[a] for a in order)


def _best_class(spec: ValidatedSpec, candidates: Sequence[PlannedOrder]) -> tuple[PlannedOrder, ...]:
    best = min(effectiveness_key(c.nums) for c in candidates)
    keep = [c for c in candidates if effectiveness_key(c.nums) == best]
    keep.sort(key=lambda c: _canonical(spec, c.order))
    return tuple(keep)


def search_frontier(spec: ValidatedSpec) -> list[SearchNode]:
    """Breadth-first search with dominance pruning over partial orders.

    Each generation expands the shortest frontier nodes in canonical order.
    A child is dropped if a frontier node is certainly better than it;
    otherwise it joins the frontier and evicts every node it is certainly
    better than. Returns the full-length survivors in insertion order.
    """
    artifacts = spec.artifact_ids
    if not artifacts:
        raise NoArtifacts("spec declares no artifacts")
    n_artif = len(artifacts)
    n_phen = total_phenomena(spec)

    # certainly_better only sees the count multiset (rest is n_phen minus its
    # sum), so frontier nodes are bucketed by sorted counts and the test runs
    # once per pair of buckets. Insertion order is kept for expansion.
    frontier: dict[int, SearchNode] = {}
    buckets: dict[tuple[int, ...], dict[int, SearchNode]] = {}
    verdicts: dict[tuple[tuple[int, ...], tuple[int, ...]], bool] = {}
    serial = itertools.count()

    def beats(sig_b: tuple[int, ...], sig_w: tuple[int, ...]) -> bool:
        key = (sig_b, sig_w)
        if key not in verdicts:
            verdicts[key] = certainly_better(
                SearchNode.from_nums(sig_b, n_phen - sum(sig_b)),
                SearchNode.from_nums(sig_w, n_phen - sum(sig_w)),
            )
        return verdicts[key]

    def insert(node: SearchNode) -> None:
        k = next(serial)
        frontier[k] = node
        buckets.setdefault(_signature(node), {})[k] = node

    def discard(k: int) -> None:
        sig = _signature(frontier.pop(k))
        del buckets[sig][k]
        if not buckets[sig]:
            del buckets[sig]

    insert(SearchNode.root(n_phen))
    while any(len(o.as_) < n_artif for o in frontier.values()):
        depth = min(len(o.as_) for o in frontier.values())
        for k in [k for k, o in frontier.items() if len(o.as_) == depth]:
            # Evicted by a sibling's child earlier in this generation.
            if k not in frontier:
                continue
            order = frontier[k]
            discard(k)
            used = set(order.as_)
            for a in artifacts:
                if a in used:
                    continue
                new = order.child(spec, a, n_phen)
                sig = _signature(new)
                if any(beats(other, sig) for other in buckets):
                    continue
                for other in [o for o in buckets if beats(sig, o)]:
                    for dead in list(buckets[other]):
                        discard(dead)
                insert(new)

    return list(frontier.values())


def search_best_orders(spec: ValidatedSpec) -> PlanResult:
    """Most effective orders found by :func:`search_frontier`.

    The dominance test is conservative, so survivors can include orders
    that are not optimal; only the most effective class is kept.
    """
    found = [PlannedOrder(o.as_, o.nums) for o in search_frontier(spec)]
    return PlanResult(_best_class(spec, found))


def _enumerate(spec: ValidatedSpec, max_enumerate: int) -> list[PlannedOrder]:
    artifacts = spec.artifact_ids
    if not artifacts:
        raise NoArtifacts("spec declares no artifacts")
    if len(artifacts) > max_enumerate:
        raise TooManyArtifacts(len(artifacts), max_enumerate)
    return [
        PlannedOrder(perm, nums_history(spec, perm).nums)
        for perm in itertools.permutations(artifacts)
    ]


def rank_all_orders(spec: ValidatedSpec, max_enumerate: int = DEFAULT_MAX_ENUMERATE) -> PlanResult:
    """Every full order with its counts, grouped into effectiveness ranks.

    Rank 1 is the most effective class; rows inside a rank follow the
    canonical artifact order of the spec.
    """
    planned = _enumerate(spec, max_enumerate)
    planned.sort(key=lambda p: (effectiveness_key(p.nums), _canonical(spec, p.order)))
    rows = []
    rank, prev = 0, None
    for p in planned:
        k = effectiveness_key(p.nums)
        if k != prev:
            rank, prev = rank + 1, k
        rows.append(RankRow(p.order, p.nums, rank))
    best = tuple(p for p, r in zip(planned, rows) if r.rank == 1)
    return PlanResult(best, tuple(rows))


def brute_force_best_orders(spec: ValidatedSpec, max_enumerate: int = DEFAULT_MAX_ENUMERATE) -> PlanResult:
    return rank_all_orders(spec, max_enumerate)
