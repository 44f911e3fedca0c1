from __future__ import annotations

import random

from .graph import Graph, make_graph


def random_connected_graph(n: int, rng: random.Random, p: float | None = None) -> Graph:
    """Random spanning tree on ``n`` vertices plus each other pair with probability ``p``.

    ``p`` defaults to a fresh uniform draw so a seeded stream covers sparse
    and dense graphs alike.
    """
    if p is None:
        p = rng.random()
    edges = [(rng.randrange(v), v) for v in range(1, n)]
    tree = set(edges)
    for u in range(n):
        for v in range(u + 1, n):
            if (u, v) not in tree and rng.random() < p:
                edges.append((u, v))
    perm = list(range(n))
    rng.shuffle(perm)
    return make_graph(n, [(perm[u], perm[v]) for u, v in edges])


def random_connected_graphs(count: int, seed: int, max_n: int = 9, min_n: int = 1) -> list[Graph]:
    rng = random.Random(seed)
    return [random_connected_graph(rng.randint(min_n, max_n), rng) for _ in range(count)]
