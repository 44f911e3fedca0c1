from __future__ import annotations

from dataclasses import dataclass
from math import prod

from .graph import DegreeSequence, Graph, degree_sequence


@dataclass(frozen=True)
class CurlingResult:
    cn: int
    cn_compound: int
    runs: DegreeSequence


def curling_number(g: Graph) -> CurlingResult:
    """Largest and product of the multiplicities in the degree sequence of ``g``."""
    seq = degree_sequence(g)
    counts = seq.counts
    return CurlingResult(cn=max(counts), cn_compound=prod(counts), runs=seq)
