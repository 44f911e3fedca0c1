"""Generators for the twelve cycle-derived graph families.

Vertex layout shared by every generator (``n`` is the order parameter):

* ``rim``    -- ``0..n-1``; the path itself, the cycle, or the inner/rim cycle
* ``outer``  -- ``n..2n-1`` where present; outer vertex ``n+i`` hangs off rim
  vertex ``i`` (pendant, second cycle, prism partner) or, for the
  triangle-based families, sits on rim edge ``i -- i+1``
* ``centre`` -- the last vertex, where present
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .graph import Graph, make_graph


class Family(str, Enum):
    PATH = "path"
    CYCLE = "cycle"
    WHEEL = "wheel"
    DOUBLE_WHEEL = "double-wheel"
    HELM = "helm"
    CLOSED_HELM = "closed-helm"
    FLOWER = "flower"
    DJEMBE = "djembe"
    SUNFLOWER = "sunflower"
    CLOSED_SUNFLOWER = "closed-sunflower"
    ANTIPRISM = "antiprism"
    BLOSSOM = "blossom"

    @classmethod
    def parse(cls, name: str) -> Family:
        key = name.strip().lower().replace("_", "-")
        try:
            return cls(key)
        except ValueError:
            raise ValueError(f"unknown family {name!r}; expected one of "
                             f"{', '.join(f.value for f in cls)}") from None

    @property
    def min_order(self) -> int:
        return 1 if self is Family.PATH else 3


class ParameterTooSmall(ValueError):
    def __init__(self, family: Family, n: int):
        super().__init__(f"{family.value} needs n >= {family.min_order}, got {n}")
        self.family = family
        self.n = n


@dataclass(frozen=True)
class FamilySpec:
    family: Family
    n: int

    def __post_init__(self):
        if self.n < self.family.min_order:
            raise ParameterTooSmall(self.family, self.n)

    @property
    def label(self) -> str:
        # wheels are indexed by rim size but named W_{n+1}
        if self.family is Family.WHEEL:
            return f"W_{self.n + 1}"
        return f"{self.family.value}({self.n})"


_HAS_OUTER = {
    Family.DOUBLE_WHEEL, Family.HELM, Family.CLOSED_HELM, Family.FLOWER,
    Family.DJEMBE, Family.SUNFLOWER, Family.CLOSED_SUNFLOWER,
    Family.ANTIPRISM, Family.BLOSSOM,
}
_HAS_CENTRE = {
    Family.WHEEL, Family.DOUBLE_WHEEL, Family.HELM, Family.CLOSED_HELM,
    Family.FLOWER, Family.DJEMBE, Family.SUNFLOWER, Family.CLOSED_SUNFLOWER,
    Family.BLOSSOM,
}


def vertex_layout(spec: FamilySpec) -> dict[str, range]:
    """Named vertex groups of ``generate(spec)``; they partition its vertex set."""
    n = spec.n
    layout = {"rim": range(0, n)}
    top = n
    if spec.family in _HAS_OUTER:
        layout["outer"] = range(n, 2 * n)
        top = 2 * n
    if spec.family in _HAS_CENTRE:
        layout["centre"] = range(top, top + 1)
    return layout


def order(spec: FamilySpec) -> int:
    """Total vertex count of the generated graph."""
    return sum(len(r) for r in vertex_layout(spec).values())


def _cycle(vs: list[int]) -> list[tuple[int, int]]:
    return [(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]


def generate(spec: FamilySpec) -> Graph:
    f, n = spec.family, spec.n
    layout = vertex_layout(spec)
    rim = list(layout["rim"])
    outer = list(layout.get("outer", ()))
    centre = layout["centre"][0] if "centre" in layout else None

    if f is Family.PATH:
        return make_graph(n, [(i, i + 1) for i in range(n - 1)])

    edges = _cycle(rim)
    if f in (Family.DOUBLE_WHEEL, Family.CLOSED_HELM, Family.DJEMBE,
             Family.CLOSED_SUNFLOWER, Family.ANTIPRISM, Family.BLOSSOM):
        edges += _cycle(outer)
    if f in (Family.HELM, Family.CLOSED_HELM, Family.FLOWER, Family.DJEMBE):
        edges += [(rim[i], outer[i]) for i in range(n)]
    if f in (Family.SUNFLOWER, Family.CLOSED_SUNFLOWER, Family.ANTIPRISM, Family.BLOSSOM):
        edges += [(rim[i], outer[i]) for i in range(n)]
        edges += [(rim[(i + 1) % n], outer[i]) for i in range(n)]
    if centre is not None:
        edges += [(v, centre) for v in rim]
        if f in (Family.DOUBLE_WHEEL, Family.FLOWER, Family.DJEMBE, Family.BLOSSOM):
            edges += [(v, centre) for v in outer]
    return make_graph(order(spec), edges)
