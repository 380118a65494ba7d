"""Longest trails in the looped complete graph and their domino snakes.

The sequences with a single red car correspond, car by car, to edges of a
longest trail in the complete graph on ``length`` vertices with a loop at
every vertex.  :func:`rho` and :func:`rho_inverse` realise that
correspondence; :func:`longest_trail` builds one such trail explicitly.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .core import ArrivalSequence, SequenceLike, as_sequence, simulate
from .errors import DomainError, ValidationError

__all__ = [
    "DominoSnake",
    "Edge",
    "Trail",
    "excluded_matching",
    "longest_trail",
    "longest_trail_length",
    "odd_degree_vertices",
    "rho",
    "rho_image",
    "rho_inverse",
    "single_red_sequences",
    "trail_to_snake",
]


class Edge(NamedTuple):
    """Undirected edge stored with ``i <= j``; ``i == j`` is a loop."""

    i: int
    j: int

    @classmethod
    def of(cls, u: int, v: int) -> Edge:
        return cls(min(u, v), max(u, v))

    @property
    def is_loop(self) -> bool:
        return self.i == self.j


@dataclass(frozen=True)
class Trail:
    """A walk given by its vertex sequence; edge ``t`` joins vertices ``t`` and ``t + 1``."""

    vertices: tuple[int, ...]

    @property
    def edges(self) -> tuple[Edge, ...]:
        v = self.vertices
        return tuple(Edge.of(v[t], v[t + 1]) for t in range(len(v) - 1))

    def __len__(self) -> int:
        return max(len(self.vertices) - 1, 0)

    def is_valid(self) -> bool:
        edges = self.edges
        return len(set(edges)) == len(edges)

    def __str__(self) -> str:
        return " -> ".join(map(str, self.vertices))


@dataclass(frozen=True)
class DominoSnake:
    pieces: tuple[tuple[int, int], ...]

    def is_valid(self, length: int | None = None) -> bool:
        """Ends match, no piece used twice, and (optionally) pieces fit the double-``length`` set."""
        for (_, right), (left, _) in zip(self.pieces, self.pieces[1:]):
            if right != left:
                return False
        unordered = [Edge.of(a, b) for a, b in self.pieces]
        if len(set(unordered)) != len(unordered):
            return False
        if length is not None:
            return all(1 <= e.i and e.j <= length for e in unordered)
        return True

    def __len__(self) -> int:
        return len(self.pieces)

    def __str__(self) -> str:
        return "".join(f"[{a}:{b}]" for a, b in self.pieces)


def _check_length(length: int) -> None:
    if length < 1:
        raise DomainError(f"length must be at least 1, got {length}")


def excluded_matching(length: int) -> set[Edge]:
    """Edges ``(1,2), (3,4), ..., (length-3, length-2)`` missing for even ``length``."""
    if length % 2:
        return set()
    return {Edge(v, v + 1) for v in range(1, length - 2, 2)}


def rho(c: int, p: int, length: int) -> Edge:
    """Edge assigned to right-lane car ``c`` of the sequence whose only 0 is at ``p``."""
    _check_length(length)
    if not (1 <= c <= length and 1 <= p <= length):
        raise DomainError(f"car {c} and zero position {p} must lie in 1..{length}")
    if p % 2:
        edge = (c + 1, p) if c < p else (p, c)
    elif length % 2:
        edge = (c, p) if c <= p else (p, c - 1)
    elif c == p - 1 and p != length:
        # the matching edge (p-1, p) is not in the trail; reuse the spare (p, length)
        edge = (p, length)
    else:
        edge = (c, p) if c <= p else (p, c - 1)
    return Edge.of(*edge)


def rho_inverse(edge: tuple[int, int], length: int) -> tuple[int, int]:
    """Return ``(car, zero_position)`` for an edge in the image of :func:`rho`."""
    _check_length(length)
    i, j = Edge.of(*edge)
    if not (1 <= i and j <= length):
        raise ValidationError(f"edge ({i}, {j}) is not in the graph on {length} vertices")
    if Edge(i, j) in excluded_matching(length):
        raise DomainError(f"edge ({i}, {j}) is not used by the longest trail for length {length}")
    if i == j:
        return i, i
    if i % 2 and j % 2:
        return j, i
    if i % 2 == 0 and j % 2 == 0:
        if length % 2 == 0 and j == length:
            return i - 1, i
        return j + 1, i
    if i % 2 == 0:
        return i - 1, j
    return i, j


def single_red_sequences(length: int) -> list[ArrivalSequence]:
    """The ``length`` sequences with exactly one 0, ordered by the 0's position."""
    _check_length(length)
    return [ArrivalSequence(tuple(0 if i == p else 1 for i in range(1, length + 1))) for p in range(1, length + 1)]


def rho_image(b: SequenceLike) -> set[Edge]:
    seq = as_sequence(b)
    if seq.zeros != 1:
        raise DomainError(f"{seq} must contain exactly one 0, found {seq.zeros}")
    p = seq.bits.index(0) + 1
    return {rho(c, p, len(seq)) for c in simulate(seq).right_lane}


def longest_trail_length(length: int) -> int:
    _check_length(length)
    if length % 2:
        return math.comb(length, 2) + length
    return math.comb(length, 2) + length // 2 + 1


def longest_trail(length: int) -> Trail:
    """One longest trail, built by edge tracing with loops added on first visits.

    Odd ``length``: an Euler circuit of the complete graph from vertex 1.
    Even ``length``: drop the matching ``(1,2), ..., (length-3, length-2)``
    and trace an Euler trail from ``length`` to ``length - 1``.  Ties go to
    the lowest-numbered unused neighbour.
    """
    _check_length(length)
    skip = excluded_matching(length)
    adj: dict[int, list[int]] = {v: [] for v in range(1, length + 1)}
    for u in range(1, length + 1):
        for v in range(u + 1, length + 1):
            if Edge(u, v) not in skip:
                adj[u].append(v)
                adj[v].append(u)
    for nbrs in adj.values():
        nbrs.sort(reverse=True)  # pop() yields the smallest

    used: set[Edge] = set()
    start = 1 if length % 2 else length
    stack = [start]
    circuit: list[int] = []
    while stack:
        u = stack[-1]
        while adj[u] and Edge.of(u, adj[u][-1]) in used:
            adj[u].pop()
        if adj[u]:
            v = adj[u].pop()
            used.add(Edge.of(u, v))
            stack.append(v)
        else:
            circuit.append(stack.pop())
    circuit.reverse()

    vertices: list[int] = []
    seen: set[int] = set()
    for v in circuit:
        vertices.append(v)
        if v not in seen:
            seen.add(v)
            vertices.append(v)
    return Trail(tuple(vertices))


def odd_degree_vertices(edges: Iterable[Edge]) -> set[int]:
    """Vertices of odd degree; a loop adds 2 to its vertex."""
    degree: Counter[int] = Counter()
    for e in edges:
        degree[e.i] += 1
        degree[e.j] += 1
    return {v for v, d in degree.items() if d % 2}


def trail_to_snake(trail: Trail) -> DominoSnake:
    v = trail.vertices
    return DominoSnake(tuple((v[t], v[t + 1]) for t in range(len(v) - 1)))
