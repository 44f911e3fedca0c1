"""Immutable simple undirected graphs on dense vertex ids ``0..n-1``."""

from __future__ import annotations

import json
from collections import Counter, deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable


class GraphError(ValueError):
    """Raised for malformed graph input."""


class SelfLoop(GraphError):
    def __init__(self, u: int):
        super().__init__(f"self-loop at vertex {u}")
        self.u = u


class VertexOutOfRange(GraphError):
    def __init__(self, u: int, n: int):
        super().__init__(f"vertex {u} outside 0..{n - 1}")
        self.u = u
        self.n = n


@dataclass(frozen=True)
class Graph:
    """A simple graph. Build instances with :func:`make_graph`.

    ``edges`` is kept as a sorted tuple of ``(u, v)`` pairs with ``u < v`` so
    that equality and hashing do not depend on input order.
    """

    n: int
    edges: tuple[tuple[int, int], ...] = field(default=())

    @cached_property
    def adjacency(self) -> tuple[int, ...]:
        """Neighbourhood of each vertex as an int bitmask."""
        adj = [0] * self.n
        for u, v in self.edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return tuple(adj)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(a.bit_count() for a in self.adjacency)

    def neighbours(self, v: int) -> list[int]:
        a = self.adjacency[v]
        return [w for w in range(self.n) if a >> w & 1]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adjacency[u] >> v & 1)

    def is_regular(self) -> bool:
        return len(set(self.degrees)) <= 1

    def relabel(self, perm: list[int]) -> Graph:
        """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
        return make_graph(self.n, [(perm[u], perm[v]) for u, v in self.edges])

    def to_json(self) -> str:
        return json.dumps({"n": self.n, "edges": [list(e) for e in self.edges]},
                          separators=(",", ":"))

    def to_dot(self) -> str:
        lines = ["graph {"]
        lines += [f"  {v};" for v in range(self.n) if not self.adjacency[v]]
        lines += [f"  {u} -- {v};" for u, v in self.edges]
        lines.append("}")
        return "\n".join(lines)


def make_graph(n: int, edges: Iterable[Iterable[int]] = ()) -> Graph:
    """Normalize an edge list into a :class:`Graph`.

    Duplicate pairs (in either orientation) collapse to one edge. Self-loops
    and endpoints outside ``0..n-1`` raise.
    """
    if n < 0:
        raise GraphError(f"negative vertex count {n}")
    seen = set()
    for pair in edges:
        u, v = pair
        for w in (u, v):
            if not 0 <= w < n:
                raise VertexOutOfRange(w, n)
        if u == v:
            raise SelfLoop(u)
        seen.add((u, v) if u < v else (v, u))
    return Graph(n, tuple(sorted(seen)))


def from_json(text: str) -> Graph:
    try:
        data = json.loads(text)
        n = data["n"]
        edges = data["edges"]
    except (json.JSONDecodeError, KeyError, TypeError) as exc:
        raise GraphError(f"bad graph JSON: {exc}") from None
    if not isinstance(n, int) or not isinstance(edges, list):
        raise GraphError("graph JSON needs integer 'n' and list 'edges'")
    for e in edges:
        if not (isinstance(e, list) and len(e) == 2 and all(isinstance(x, int) for x in e)):
            raise GraphError(f"bad edge {e!r}")
    return make_graph(n, edges)


@dataclass(frozen=True)
class DegreeSequence:
    """Run-length form of a degree sequence: ``(degree, count)`` ascending by degree."""

    runs: tuple[tuple[int, int], ...]

    @property
    def distinct_count(self) -> int:
        return len(self.runs)

    @property
    def counts(self) -> tuple[int, ...]:
        return tuple(k for _, k in self.runs)


def degree_sequence(g: Graph) -> DegreeSequence:
    return DegreeSequence(tuple(sorted(Counter(g.degrees).items())))


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    seen = {0}
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for w in g.neighbours(u):
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == g.n
