"""Structure-preserving maps on arrival sequences.

* :func:`phi` sends an arrival sequence to a coin-flip sequence whose larger
  face count equals the final right-lane length.
* :func:`psi` cuts a sequence just after a chosen bounce and complements the
  tail (a reflection argument on sets with a guaranteed number of bounces).
* :func:`step_map` turns the two 1s that produce the last off-origin bounce
  into 0s, moving the endpoint from ``(n, m)`` to ``(n - 1, m + 1)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Union

from .core import ArrivalSequence, SequenceLike, as_sequence, simulate
from .errors import DomainError, ValidationError

__all__ = [
    "CoinSequence",
    "max_heads_tails",
    "parity_from_coins",
    "phi",
    "phi_inverse",
    "psi",
    "psi_inverse",
    "step_map",
    "step_map_inverse",
]


@dataclass(frozen=True)
class CoinSequence:
    """Sequence of coin flips; ``H`` stands for 0 and ``T`` for 1."""

    flips: str

    def __post_init__(self) -> None:
        bad = set(self.flips) - {"H", "T"}
        if bad:
            raise ValidationError(f"coin sequence may only contain 'H' and 'T', found {sorted(bad)!r}")

    @classmethod
    def from_bits(cls, bits: Iterable[int]) -> CoinSequence:
        return cls("".join("T" if bit else "H" for bit in bits))

    @property
    def bits(self) -> tuple[int, ...]:
        return tuple(1 if f == "T" else 0 for f in self.flips)

    @property
    def heads(self) -> int:
        return self.flips.count("H")

    @property
    def tails(self) -> int:
        return self.flips.count("T")

    def __len__(self) -> int:
        return len(self.flips)

    def __str__(self) -> str:
        return self.flips


CoinLike = Union[CoinSequence, str]


def _as_coins(c: CoinLike) -> CoinSequence:
    return c if isinstance(c, CoinSequence) else CoinSequence(c.strip())


def max_heads_tails(c: CoinLike) -> int:
    c = _as_coins(c)
    return max(c.heads, c.tails)


def phi(b: SequenceLike) -> CoinSequence:
    seq = as_sequence(b)
    parity = simulate(seq).parity.bits
    return CoinSequence.from_bits((x + p) % 2 for x, p in zip(seq.bits, parity))


def parity_from_coins(c: CoinLike) -> tuple[int, ...]:
    """Recover the parity vector from the coins alone.

    Parity starts at 0 and flips right after the prefix where tails first
    lead heads; it flips back right after heads next lead tails, and so on.
    """
    c = _as_coins(c)
    out = []
    p = 0
    lead = 0  # tails minus heads over the prefix seen so far
    for bit in c.bits:
        out.append(p)
        lead += 1 if bit else -1
        if (p == 0 and lead > 0) or (p == 1 and lead < 0):
            p ^= 1
    return tuple(out)


def phi_inverse(c: CoinLike) -> ArrivalSequence:
    c = _as_coins(c)
    parity = parity_from_coins(c)
    return ArrivalSequence(tuple((x + p) % 2 for x, p in zip(c.bits, parity)))


def _split_after_bounce(seq: ArrivalSequence, s: int) -> int:
    if s < 1:
        raise DomainError(f"bounce index must be positive, got {s}")
    bounces = simulate(seq).bounce_positions
    if len(bounces) < s:
        raise DomainError(f"{seq} has {len(bounces)} bounces, fewer than the requested {s}")
    return bounces[s - 1]


def psi(b: SequenceLike, s: int) -> ArrivalSequence:
    """Keep ``b`` through its ``s``-th bounce and complement everything after."""
    seq = as_sequence(b)
    cut = _split_after_bounce(seq, s)
    return seq[:cut] + seq[cut:].complement()


def psi_inverse(b: SequenceLike, s: int) -> ArrivalSequence:
    # the prefix through the s-th bounce is untouched by psi, so the cut point
    # of the image is the same and applying the construction again undoes it
    return psi(b, s)


def step_map(b: SequenceLike) -> ArrivalSequence:
    """Replace the two 1s behind the last off-origin bounce with 0s."""
    seq = as_sequence(b)
    result = simulate(seq)
    n, m = result.endpoint
    k = seq.zeros
    if not (m > k + 1 and m > n > 0):
        raise DomainError(f"{seq} ends at ({n}, {m}) with k={k}; need m > k + 1 and m > n > 0")
    j = result.bounce_positions[-1]
    # m - k > 1 bounces exist, so the last one is not car 1
    assert j > 1 and seq[j - 2] == 1
    bits = list(seq.bits)
    bits[j - 2] = bits[j - 1] = 0
    return ArrivalSequence(tuple(bits))


def step_map_inverse(b: SequenceLike) -> ArrivalSequence:
    """Replace the two 0s after the last height-one point with 1s."""
    seq = as_sequence(b)
    result = simulate(seq)
    x, y = result.endpoint
    if result.bounces < 1 or y - x < 3:
        raise DomainError(
            f"{seq} ends at ({x}, {y}) with {result.bounces} bounces; "
            "need at least one bounce and y - x >= 3"
        )
    bits = list(seq.bits)
    gap = 0
    last = 0  # cars placed when the path was last one step above the diagonal
    for i, bit in enumerate(bits, start=1):
        gap += -1 if (bit == 1 and gap > 0) else 1
        if gap == 1:
            last = i
    if last + 2 > len(bits) or bits[last] != 0 or bits[last + 1] != 0:
        raise DomainError(f"{seq}: the last height-one point (after car {last}) is not followed by two 0s")
    bits[last] = bits[last + 1] = 1
    return ArrivalSequence(tuple(bits))
