"""Brute-force ground truth for chi and the lex-max class-size vector.

Deliberately naive: vertices are assigned in raw index order, the only
symmetry reduction is first-use canonical colour labelling, and nothing is
bounded. It must not share search code with :mod:`chromcurl.chroma`.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from math import prod

from .graph import Graph

DEFAULT_BUDGET = 14


class BudgetExceeded(RuntimeError):
    def __init__(self, n: int, budget: int):
        super().__init__(f"graph has {n} vertices, oracle budget is {budget}")
        self.n = n
        self.budget = budget


@dataclass(frozen=True)
class OracleResult:
    chi: int
    lex_max_theta: tuple[int, ...]
    count: int  # proper chi-colourings, up to colour permutation

    @property
    def cn_chi(self) -> int:
        return max(self.lex_max_theta)

    @property
    def cnc_chi(self) -> int:
        return prod(self.lex_max_theta)

    def as_dict(self) -> dict:
        return {"chi": self.chi, "lexMaxTheta": list(self.lex_max_theta),
                "count": self.count, "cnChi": self.cn_chi, "cncChi": self.cnc_chi}


def _canonical_colourings(n: int, earlier: list[list[int]], k: int):
    """Yield every proper colouring with colours 0..k-1, each used, where
    colours appear in first-use order along vertex indices."""
    colour = [-1] * n

    def rec(v: int, used: int):
        if v == n:
            if used == k:
                yield tuple(colour)
            return
        for c in range(min(used + 1, k)):
            if all(colour[w] != c for w in earlier[v]):
                colour[v] = c
                yield from rec(v + 1, max(used, c + 1))
        colour[v] = -1

    yield from rec(0, 0)


def oracle_chromatic(g: Graph, budget: int = DEFAULT_BUDGET) -> OracleResult:
    if g.n > budget:
        raise BudgetExceeded(g.n, budget)
    if g.n < 1:
        raise ValueError("oracle needs at least one vertex")
    earlier: list[list[int]] = [[] for _ in range(g.n)]
    for u, v in g.edges:
        earlier[max(u, v)].append(min(u, v))

    for k in range(1, g.n + 1):
        raw_vectors = set()
        count = 0
        for colouring in _canonical_colourings(g.n, earlier, k):
            sizes = [0] * k
            for c in colouring:
                sizes[c] += 1
            raw_vectors.add(tuple(sizes))
            count += 1
        if count:
            break

    best = max(tuple(sorted(v, reverse=True)) for v in raw_vectors)
    if k <= 7:
        # lex-max over every relabelling, without sorting, must agree
        unsorted_best = max(p for v in raw_vectors for p in permutations(v))
        assert unsorted_best == best, (unsorted_best, best)
    assert all(a >= b for a, b in zip(best, best[1:])), best
    return OracleResult(chi=k, lex_max_theta=best, count=count)
