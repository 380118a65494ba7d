"""Color-blind equivalence classes.

Two arrival sequences are equivalent when the same cars (by position) end up
in the right lane.  A car that chooses while the lanes are level always goes
right whatever its colour, so a class is obtained by freeing exactly the bits
at the touch positions of any member.
"""

from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass

from .core import ArrivalSequence, SequenceLike, as_sequence, simulate
from .errors import DomainError, ResourceLimitError

__all__ = ["ColorBlindClass", "DEFAULT_PARTITION_CAP", "class_of", "class_size", "partition"]

DEFAULT_PARTITION_CAP = 20


@dataclass(frozen=True)
class ColorBlindClass:
    representative: ArrivalSequence
    right_lane_vector: tuple[int, ...]
    touch_vector: tuple[int, ...]
    members: frozenset[ArrivalSequence]

    @property
    def size(self) -> int:
        return len(self.members)

    def sorted_members(self) -> list[ArrivalSequence]:
        return sorted(self.members, key=str)

    def to_dict(self) -> dict:
        return {
            "representative": str(self.representative),
            "right_lane_vector": list(self.right_lane_vector),
            "touch_vector": list(self.touch_vector),
            "size": self.size,
            "members": [str(m) for m in self.sorted_members()],
        }


def _free_bits(seq: ArrivalSequence, positions: tuple[int, ...]) -> frozenset[ArrivalSequence]:
    bits = list(seq.bits)
    members = set()
    for choice in itertools.product((0, 1), repeat=len(positions)):
        for pos, bit in zip(positions, choice):
            bits[pos - 1] = bit
        members.add(ArrivalSequence(tuple(bits)))
    return frozenset(members)


def class_of(b: SequenceLike) -> ColorBlindClass:
    seq = as_sequence(b)
    result = simulate(seq)
    members = _free_bits(seq, result.touch_positions)
    return ColorBlindClass(
        representative=min(members, key=str),
        right_lane_vector=result.right_lane,
        touch_vector=result.touch_positions,
        members=members,
    )


def class_size(b: SequenceLike) -> int:
    return 2 ** len(simulate(b).touch_positions)


def partition(length: int, cap: int = DEFAULT_PARTITION_CAP) -> list[ColorBlindClass]:
    """All classes of sequences of the given length, grouped by direct simulation.

    Classes come back ordered by representative.  Membership is taken from
    the grouping itself, not from :func:`class_of`, so the two can be checked
    against each other.
    """
    if length < 0:
        raise DomainError(f"length must be nonnegative, got {length}")
    if length > cap:
        raise ResourceLimitError(f"partition of length {length} exceeds the cap of {cap}")
    groups: dict[tuple[int, ...], list[ArrivalSequence]] = defaultdict(list)
    touches: dict[tuple[int, ...], tuple[int, ...]] = {}
    for value in range(2**length):
        seq = ArrivalSequence.from_int(value, length)
        result = simulate(seq)
        groups[result.right_lane].append(seq)
        touches.setdefault(result.right_lane, result.touch_positions)
    classes = [
        ColorBlindClass(
            representative=min(members, key=str),
            right_lane_vector=vector,
            touch_vector=touches[vector],
            members=frozenset(members),
        )
        for vector, members in groups.items()
    ]
    classes.sort(key=lambda c: str(c.representative))
    return classes
