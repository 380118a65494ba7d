"""Arrival sequences and the deterministic two-lane merging rule.

Cars arrive one at a time.  A ``0`` (red) car always joins the right lane.
A ``1`` (green) car joins the shorter lane, and joins the right lane when the
two lanes are equally long.  A green car that ends up in the right lane is a
*bounce*: its merging path leaves the diagonal ``y = x`` upward where a right
step would otherwise be taken.

Car positions are 1-based everywhere in this module.  Lattice coordinates are
``(x, y) = (left-lane length, right-lane length)``, so every merging path stays
weakly above the diagonal and ends at ``(n, m)`` with ``m >= n``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Iterator, Union

from .errors import ValidationError

__all__ = [
    "ArrivalSequence",
    "MergeResult",
    "MergingPath",
    "ParityVector",
    "Step",
    "SequenceLike",
    "as_sequence",
    "merging_path",
    "parity_vector",
    "simulate",
    "touch_positions",
]


@dataclass(frozen=True)
class ArrivalSequence:
    """An immutable binary string of car types (0 = red, 1 = green)."""

    bits: tuple[int, ...]

    def __post_init__(self) -> None:
        bits = tuple(self.bits)
        for i, bit in enumerate(bits, start=1):
            if bit not in (0, 1) or isinstance(bit, bool):
                raise ValidationError(f"car {i}: expected 0 or 1, got {bit!r}")
        object.__setattr__(self, "bits", bits)

    @classmethod
    def parse(cls, text: str) -> ArrivalSequence:
        text = text.strip()
        bad = set(text) - {"0", "1"}
        if bad:
            raise ValidationError(
                f"arrival sequence may only contain '0' and '1', found {sorted(bad)!r} in {text!r}"
            )
        return cls(tuple(int(ch) for ch in text))

    @classmethod
    def from_int(cls, value: int, length: int) -> ArrivalSequence:
        """Decode an integer where bit ``i`` holds car ``i + 1``."""
        if length < 0 or value < 0 or value >> length:
            raise ValidationError(f"{value} does not fit in {length} cars")
        return cls(tuple((value >> i) & 1 for i in range(length)))

    def to_int(self) -> int:
        return sum(bit << i for i, bit in enumerate(self.bits))

    @property
    def zeros(self) -> int:
        return self.bits.count(0)

    @property
    def ones(self) -> int:
        return self.bits.count(1)

    def complement(self) -> ArrivalSequence:
        return ArrivalSequence(tuple(1 - bit for bit in self.bits))

    def __len__(self) -> int:
        return len(self.bits)

    def __iter__(self) -> Iterator[int]:
        return iter(self.bits)

    def __getitem__(self, index):
        if isinstance(index, slice):
            return ArrivalSequence(self.bits[index])
        return self.bits[index]

    def __add__(self, other: ArrivalSequence) -> ArrivalSequence:
        return ArrivalSequence(self.bits + as_sequence(other).bits)

    def __str__(self) -> str:
        return "".join(map(str, self.bits))


SequenceLike = Union[ArrivalSequence, str, Iterable[int]]


def as_sequence(b: SequenceLike) -> ArrivalSequence:
    """Coerce a string, iterable of ints, or ArrivalSequence."""
    if isinstance(b, ArrivalSequence):
        return b
    if isinstance(b, str):
        return ArrivalSequence.parse(b)
    return ArrivalSequence(tuple(b))


@dataclass(frozen=True)
class ParityVector:
    """Binary vector starting at 0 that toggles right after every bounce."""

    bits: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.bits)

    def __str__(self) -> str:
        return "".join(map(str, self.bits))


class Step(enum.Enum):
    RIGHT = "R"
    UP = "U"
    UP_BOUNCE = "U*"


@dataclass(frozen=True)
class MergingPath:
    """Decorated lattice path starting at the origin."""

    steps: tuple[Step, ...]

    def points(self) -> list[tuple[int, int]]:
        """Lattice points visited, origin included (``len(steps) + 1`` of them)."""
        x = y = 0
        out = [(0, 0)]
        for step in self.steps:
            if step is Step.RIGHT:
                x += 1
            else:
                y += 1
            out.append((x, y))
        return out

    @property
    def endpoint(self) -> tuple[int, int]:
        return self.points()[-1]

    def __len__(self) -> int:
        return len(self.steps)

    def __str__(self) -> str:
        return ",".join(step.value for step in self.steps)


@dataclass(frozen=True)
class MergeResult:
    """Outcome of running one arrival sequence through the merging rule."""

    right_lane: tuple[int, ...]
    left_lane: tuple[int, ...]
    bounce_positions: tuple[int, ...]
    touch_positions: tuple[int, ...]
    parity: ParityVector
    endpoint: tuple[int, int]

    @property
    def r(self) -> int:
        """Final right-lane length."""
        return len(self.right_lane)

    @property
    def bounces(self) -> int:
        return len(self.bounce_positions)

    @property
    def touches(self) -> int:
        return len(self.touch_positions)

    def to_dict(self) -> dict:
        return {
            "right_lane": list(self.right_lane),
            "left_lane": list(self.left_lane),
            "bounce_positions": list(self.bounce_positions),
            "touch_positions": list(self.touch_positions),
            "parity": str(self.parity),
            "endpoint": list(self.endpoint),
        }


def simulate(b: SequenceLike) -> MergeResult:
    """Run the merging rule on ``b`` and record everything it produces."""
    seq = as_sequence(b)
    right: list[int] = []
    left: list[int] = []
    bounces: list[int] = []
    touches: list[int] = []
    parity: list[int] = []
    p = 0
    for i, bit in enumerate(seq.bits, start=1):
        parity.append(p)
        on_diagonal = len(left) == len(right)
        if on_diagonal:
            touches.append(i)
        if bit == 1 and len(left) < len(right):
            left.append(i)
        else:
            right.append(i)
            if bit == 1:
                # only reachable on the diagonal
                bounces.append(i)
                p ^= 1
    return MergeResult(
        right_lane=tuple(right),
        left_lane=tuple(left),
        bounce_positions=tuple(bounces),
        touch_positions=tuple(touches),
        parity=ParityVector(tuple(parity)),
        endpoint=(len(left), len(right)),
    )


def parity_vector(b: SequenceLike) -> ParityVector:
    return simulate(b).parity


def touch_positions(b: SequenceLike) -> tuple[int, ...]:
    """Cars that choose while the two lanes are equally long."""
    return simulate(b).touch_positions


def merging_path(b: SequenceLike) -> MergingPath:
    result = simulate(b)
    bounce = set(result.bounce_positions)
    left = set(result.left_lane)
    steps = []
    for i in range(1, len(as_sequence(b)) + 1):
        if i in left:
            steps.append(Step.RIGHT)
        elif i in bounce:
            steps.append(Step.UP_BOUNCE)
        else:
            steps.append(Step.UP)
    return MergingPath(tuple(steps))
