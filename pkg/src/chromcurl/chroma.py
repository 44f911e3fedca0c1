"""Exact chromatic number, chi-minus colourings and chromatic curling numbers.

A chi-minus colouring is a proper colouring with exactly chi(G) colours whose
class-size vector ``(theta_1, theta_2, ...)`` is lexicographically maximal over
*all* such colourings: theta_1 is as large as possible, then theta_2 among the
colourings attaining that theta_1, and so on. The chi-plus colouring is the
same colouring with labels reversed (``i -> chi + 1 - i``).

All searches work on int bitmasks over the vertex set.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import prod
from typing import Iterator, Sequence

from .graph import Graph


class ImproperColouring(ValueError):
    def __init__(self, edge: tuple[int, int]):
        super().__init__(f"edge {edge[0]}-{edge[1]} is monochromatic")
        self.edge = edge


@dataclass(frozen=True)
class ColourAssignment:
    """Colour ``colours[v]`` (1-based) for each vertex ``v``; colours 1..k all used."""

    colours: tuple[int, ...]

    def __post_init__(self):
        used = set(self.colours)
        if used and used != set(range(1, max(used) + 1)):
            raise ValueError(f"colours must be exactly 1..k, got {sorted(used)}")

    @property
    def k(self) -> int:
        return max(self.colours, default=0)

    def classes(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.k)]
        for v, c in enumerate(self.colours):
            out[c - 1].append(v)
        return out


@dataclass(frozen=True)
class ChromaticCurlingResult:
    chi: int
    theta: tuple[int, ...]
    witness: ColourAssignment

    @property
    def cn_chi(self) -> int:
        return max(self.theta)

    @property
    def cnc_chi(self) -> int:
        return prod(self.theta)

    def as_dict(self, witness: bool = False) -> dict:
        d = {"chi": self.chi, "theta": list(self.theta),
             "cnChi": self.cn_chi, "cncChi": self.cnc_chi}
        if witness:
            d["witness"] = list(self.witness.colours)
        return d


def check_proper(g: Graph, colours: Sequence[int]) -> None:
    if len(colours) != g.n:
        raise ValueError(f"assignment has {len(colours)} entries for {g.n} vertices")
    for u, v in g.edges:
        if colours[u] == colours[v]:
            raise ImproperColouring((u, v))


def class_sizes(g: Graph, a: ColourAssignment) -> tuple[int, ...]:
    """``theta[i-1]`` = number of vertices coloured ``i``."""
    check_proper(g, a.colours)
    theta = [0] * a.k
    for c in a.colours:
        theta[c - 1] += 1
    return tuple(theta)


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class _Search:
    """Per-graph search state; memo tables are keyed by vertex-subset masks."""

    def __init__(self, g: Graph):
        self.n = g.n
        self.adj = g.adjacency
        self.full = (1 << g.n) - 1
        # branching order for independent-set enumeration
        self.order = sorted(range(g.n), key=lambda v: (-g.degrees[v], v))
        self._colourable: dict[tuple[int, int], bool] = {}
        self._lexmax: dict[tuple[int, int], tuple[int, ...] | None] = {}
        self._alpha: dict[int, int] = {}

    def independent(self, mask: int) -> bool:
        return all(not self.adj[v] & mask for v in _bits(mask))

    # -- chromatic number -------------------------------------------------

    def clique_lower_bound(self, mask: int) -> int:
        best = 1 if mask else 0
        verts = [v for v in self.order if mask >> v & 1]
        for v in verts:
            clique, common = 1, self.adj[v] & mask
            for w in verts:
                if common >> w & 1:
                    clique += 1
                    common &= self.adj[w]
            best = max(best, clique)
        return best

    def dsatur_upper_bound(self, mask: int) -> int:
        classes: list[int] = []
        left = mask
        while left:
            v = max(_bits(left), key=lambda u: (
                sum(1 for c in classes if self.adj[u] & c),
                (self.adj[u] & mask).bit_count(), -u))
            for i, c in enumerate(classes):
                if not self.adj[v] & c:
                    classes[i] |= 1 << v
                    break
            else:
                classes.append(1 << v)
            left &= ~(1 << v)
        return len(classes)

    def colourable(self, mask: int, k: int) -> bool:
        """Whether the subgraph induced by ``mask`` has a proper colouring with <= k colours."""
        if mask == 0:
            return True
        if k <= 0:
            return False
        key = (mask, k)
        hit = self._colourable.get(key)
        if hit is None:
            if k == 1:
                hit = self.independent(mask)
            elif mask.bit_count() <= k:
                hit = True
            else:
                hit = self._dsatur_backtrack(mask, k)
            self._colourable[key] = hit
        return hit

    def _dsatur_backtrack(self, mask: int, k: int) -> bool:
        adj = self.adj
        classes = [0] * k
        deg = {v: (adj[v] & mask).bit_count() for v in _bits(mask)}

        def pick(left: int, used: int) -> int:
            return max(_bits(left), key=lambda u: (
                sum(1 for c in classes[:used] if adj[u] & c), deg[u], -u))

        def rec(left: int, used: int) -> bool:
            if not left:
                return True
            v = pick(left, used)
            bit = 1 << v
            # a fresh colour is interchangeable with any other unused one
            for c in range(min(used + 1, k)):
                if not adj[v] & classes[c]:
                    classes[c] |= bit
                    ok = rec(left & ~bit, max(used, c + 1))
                    classes[c] &= ~bit
                    if ok:
                        return True
            return False

        return rec(mask, 0)

    def chromatic_number(self, mask: int | None = None) -> int:
        mask = self.full if mask is None else mask
        if mask == 0:
            return 0
        lo, hi = self.clique_lower_bound(mask), self.dsatur_upper_bound(mask)
        for k in range(lo, hi):
            if self.colourable(mask, k):
                return k
        return hi

    # -- lexicographically maximal class sizes ----------------------------

    def maximal_independent_sets(self, region: int, floor: list[int]) -> Iterator[int]:
        """Maximal independent sets of ``region`` with size >= ``floor[0]``.

        ``floor`` is read on every step so the caller can raise it as its
        incumbent improves. Larger sets tend to come out first.
        """
        adj = self.adj
        order = [v for v in self.order if region >> v & 1]

        def rec(i: int, chosen: int, size: int, blocked: int) -> Iterator[int]:
            # blocked: vertices adjacent to chosen
            while i < len(order) and (blocked >> order[i] & 1):
                i += 1
            cand = 0
            for v in order[i:]:
                cand |= 1 << v
            cand &= ~blocked
            if size + cand.bit_count() < floor[0]:
                return
            if i == len(order):
                if not (region & ~chosen & ~blocked):
                    yield chosen
                return
            v = order[i]
            yield from rec(i + 1, chosen | 1 << v, size + 1, blocked | adj[v])
            # skipping v is only useful if a later candidate can dominate it
            if adj[v] & cand:
                yield from rec(i + 1, chosen, size, blocked)

        yield from rec(0, 0, 0, 0)

    def lexmax(self, region: int, m: int) -> tuple[int, ...] | None:
        """Lex-max class sizes over colourings of ``region`` with exactly ``m`` colours.

        Callers guarantee chi(region) == m, which makes every colour class of
        an optimal colouring a maximal independent set of what is left when
        it is chosen. Returns None if ``region`` is not m-colourable.
        """
        key = (region, m)
        if key in self._lexmax:
            return self._lexmax[key]
        size = region.bit_count()
        if m == 0:
            best = () if region == 0 else None
        elif size < m or not self.colourable(region, m):
            best = None
        elif m == 1:
            best = (size,)
        else:
            best = None
            floor = [1]
            for cls in self.maximal_independent_sets(region, floor):
                first = cls.bit_count()
                if first > size - (m - 1):
                    continue
                rest = region & ~cls
                if not self.colourable(rest, m - 1):
                    continue
                tail = self.lexmax(rest, m - 1)
                if tail is None:
                    continue
                cand = (first, *tail)
                if best is None or cand > best:
                    best = cand
                    floor[0] = first
        self._lexmax[key] = best
        return best

    def alpha(self, mask: int) -> int:
        """Independence number of the subgraph induced by ``mask``."""
        if mask == 0:
            return 0
        hit = self._alpha.get(mask)
        if hit is None:
            v = max(_bits(mask), key=lambda u: ((self.adj[u] & mask).bit_count(), -u))
            rest = mask & ~(1 << v)
            if not self.adj[v] & mask:
                hit = 1 + self.alpha(rest)
            else:
                hit = max(self.alpha(rest), 1 + self.alpha(rest & ~self.adj[v]))
            self._alpha[mask] = hit
        return hit

    def smallest_witness(self, theta: Sequence[int]) -> tuple[int, ...] | None:
        """Lexicographically smallest colour sequence (vertex-index order)
        whose colour ``i`` class has exactly ``theta[i-1]`` vertices."""
        adj, n, k = self.adj, self.n, len(theta)
        need = list(theta)
        classes = [0] * k
        colours = [0] * n

        def feasible(v: int) -> bool:
            left = self.full & ~((1 << v) - 1)
            for c in range(k):
                if need[c]:
                    blocked = 0
                    for u in _bits(classes[c]):
                        blocked |= adj[u]
                    avail = left & ~blocked
                    if avail.bit_count() < need[c] or self.alpha(avail) < need[c]:
                        return False
            for u in _bits(left):
                if not any(need[c] and not adj[u] & classes[c] for c in range(k)):
                    return False
            return True

        def rec(v: int) -> bool:
            if v == n:
                return True
            bit = 1 << v
            for c in range(k):
                if need[c] and not adj[v] & classes[c]:
                    classes[c] |= bit
                    need[c] -= 1
                    colours[v] = c + 1
                    if feasible(v + 1) and rec(v + 1):
                        return True
                    classes[c] &= ~bit
                    need[c] += 1
            colours[v] = 0
            return False

        return tuple(colours) if rec(0) else None


def chromatic_number(g: Graph) -> int:
    if g.n < 1:
        raise ValueError("chromatic number needs at least one vertex")
    return _Search(g).chromatic_number()


def chi_minus(g: Graph) -> ChromaticCurlingResult:
    """chi-minus colouring of ``g`` and the chromatic curling numbers it induces.

    The witness is the smallest colour sequence (in vertex-index order) among
    all colourings realising the optimal class sizes, so results are
    reproducible.
    """
    if g.n < 1:
        raise ValueError("chi-minus colouring needs at least one vertex")
    search = _Search(g)
    chi = search.chromatic_number()
    theta = search.lexmax(search.full, chi)
    if theta is None:  # pragma: no cover - chi is exact, so this cannot happen
        raise RuntimeError("no colouring with chi colours found")
    colours = search.smallest_witness(theta)
    if colours is None:  # pragma: no cover
        raise RuntimeError(f"no witness for class sizes {theta}")
    return ChromaticCurlingResult(chi, theta, ColourAssignment(colours))


def chi_plus(r: ChromaticCurlingResult) -> ChromaticCurlingResult:
    """Relabel a chi-minus result by ``i -> chi + 1 - i``."""
    flipped = tuple(r.chi + 1 - c for c in r.witness.colours)
    return ChromaticCurlingResult(r.chi, tuple(reversed(r.theta)), ColourAssignment(flipped))
