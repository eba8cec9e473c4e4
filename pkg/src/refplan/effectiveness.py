"""Per-step introduction counts and the effectiveness preorder on orders."""

from __future__ import annotations

import enum
from collections.abc import Sequence
from dataclasses import dataclass

from refplan.closure import req_as
from refplan.model import ValidatedSpec


class Effectiveness(enum.Enum):
    MORE_EFFECTIVE = -1
    EQUAL = 0
    LESS_EFFECTIVE = 1


class IndexOutOfRange(IndexError):
    pass


class InvalidOrder(ValueError):
    pass


def check_order(order: Sequence[str]) -> tuple[str, ...]:
    order = tuple(order)
    if len(set(order)) != len(order):
        raise InvalidOrder(f"artifact repeated in order {order!r}")
    return order


def effectiveness_key(nums: Sequence[int]) -> tuple[int, ...]:
    """Descending-sorted counts with trailing zeros dropped.

    Plain tuple comparison on this key is the zero-padded lexicographic
    comparison: after stripping, every entry is positive, so a strict prefix
    always loses to its extension exactly as a padded zero would.
    """
    s = sorted(nums, reverse=True)
    while s and s[-1] == 0:
        s.pop()
    return tuple(s)


@dataclass(frozen=True)
class NumsHistory:
    nums: tuple[int, ...]

    @property
    def snums(self) -> tuple[int, ...]:
        return tuple(sorted(self.nums, reverse=True))

    @property
    def key(self) -> tuple[int, ...]:
        return effectiveness_key(self.nums)


def intro_phenomena(spec: ValidatedSpec, order: Sequence[str], i: int) -> frozenset[str]:
    """Phenomena newly introduced at step ``i`` (1-based) of ``order``."""
    order = check_order(order)
    if not 1 <= i <= len(order):
        raise IndexOutOfRange(f"step {i} outside 1..{len(order)}")
    return req_as(spec, order[:i]) - req_as(spec, order[: i - 1])


def nums_history(spec: ValidatedSpec, order: Sequence[str]) -> NumsHistory:
    order = check_order(order)
    seen: frozenset[str] = frozenset()
    nums = []
    for a in order:
        now = seen | req_as(spec, (a,))
        nums.append(len(now) - len(seen))
        seen = now
    return NumsHistory(tuple(nums))


def compare_effectiveness(x: NumsHistory | Sequence[int], y: NumsHistory | Sequence[int]) -> Effectiveness:
    """Compare two histories; smaller zero-padded descending counts win."""
    kx = x.key if isinstance(x, NumsHistory) else effectiveness_key(x)
    ky = y.key if isinstance(y, NumsHistory) else effectiveness_key(y)
    if kx < ky:
        return Effectiveness.MORE_EFFECTIVE
    if kx > ky:
        return Effectiveness.LESS_EFFECTIVE
    return Effectiveness.EQUAL
