"""Sweep family graphs and compare published claims, the engine and the oracle.

A disagreement between the engine and the oracle is a bug and makes the
sweep fail. A disagreement between a published claim and the (oracle-backed)
engine is a finding and is only reported.
"""

from __future__ import annotations

import csv
import io
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

from .chroma import ColourAssignment, chi_minus, class_sizes
from .families import Family, FamilySpec, generate
from .formulas import ClaimRecord, UnsupportedParameter, claimed_values, stated_theta
from .oracle import DEFAULT_BUDGET, oracle_chromatic


class Verdict(str, Enum):
    CONFIRMED = "CONFIRMED"
    PAPER_MISMATCH = "PAPER_MISMATCH"
    ENGINE_ORACLE_MISMATCH = "ENGINE_ORACLE_MISMATCH"
    SKIPPED = "SKIPPED"


@dataclass(frozen=True)
class VerdictRecord:
    claim: ClaimRecord
    order: int
    chi: int
    theta: tuple[int, ...]
    computed_cn: int
    computed_cnc: int
    oracle_chi: int | None
    oracle_theta: tuple[int, ...] | None
    oracle_cn: int | None
    oracle_cnc: int | None
    verdict: Verdict

    @property
    def family(self) -> Family:
        return self.claim.family

    @property
    def n(self) -> int:
        return self.claim.n

    @property
    def oracle_backed(self) -> bool:
        return self.oracle_theta is not None

    def as_dict(self) -> dict:
        skipped = "SKIPPED"
        return {
            "family": self.family.value,
            "n": self.n,
            "order": self.order,
            "chi": self.chi,
            "theta": list(self.theta),
            "claimedCn": self.claim.claimed_cn,
            "claimedCnc": self.claim.claimed_cnc,
            "computedCn": self.computed_cn,
            "computedCnc": self.computed_cnc,
            "oracleCn": skipped if self.oracle_cn is None else self.oracle_cn,
            "oracleCnc": skipped if self.oracle_cnc is None else self.oracle_cnc,
            "verdict": self.verdict.value,
            "source": self.claim.source,
        }


def verify_one(family: Family, n: int, budget: int = DEFAULT_BUDGET) -> VerdictRecord:
    g = generate(FamilySpec(family, n))
    result = chi_minus(g)
    try:
        claim = claimed_values(family, n)
    except UnsupportedParameter:
        claim = ClaimRecord(family, n, None, None, "none")

    oracle = oracle_chromatic(g, budget) if g.n <= budget else None

    if oracle is not None and (oracle.chi, oracle.lex_max_theta) != (result.chi, result.theta):
        verdict = Verdict.ENGINE_ORACLE_MISMATCH
    elif claim.claimed_cn is None:
        verdict = Verdict.SKIPPED
    elif (claim.claimed_cn, claim.claimed_cnc) == (result.cn_chi, result.cnc_chi):
        verdict = Verdict.CONFIRMED
    else:
        verdict = Verdict.PAPER_MISMATCH

    return VerdictRecord(
        claim=claim,
        order=g.n,
        chi=result.chi,
        theta=result.theta,
        computed_cn=result.cn_chi,
        computed_cnc=result.cnc_chi,
        oracle_chi=oracle.chi if oracle else None,
        oracle_theta=oracle.lex_max_theta if oracle else None,
        oracle_cn=oracle.cn_chi if oracle else None,
        oracle_cnc=oracle.cnc_chi if oracle else None,
        verdict=verdict,
    )


def _verify_star(args):
    return verify_one(*args)


def verify_sweep(jobs_list: Sequence[tuple[Family, int]], budget: int = DEFAULT_BUDGET,
                 workers: int = 1) -> list[VerdictRecord]:
    """Verify each ``(family, n)``; results come back in input order."""
    tasks = [(f, n, budget) for f, n in jobs_list]
    if workers <= 1 or len(tasks) <= 1:
        return [verify_one(*t) for t in tasks]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_verify_star, tasks))


def verify_family(family: Family, n_range: Iterable[int], budget: int = DEFAULT_BUDGET,
                  workers: int = 1) -> list[VerdictRecord]:
    ns = list(n_range)
    for n in ns:
        FamilySpec(family, n)  # raises ParameterTooSmall
    return verify_sweep([(family, n) for n in ns], budget, workers)


def default_range(family: Family, n_min: int | None = None,
                  n_max: int | None = None) -> range:
    lo = 2 if family is Family.PATH else 3
    hi = 12 if family is Family.PATH else 10
    lo = lo if n_min is None else max(n_min, family.min_order)
    hi = hi if n_max is None else n_max
    return range(lo, hi + 1)


def witness_check(family: Family, n: int, assignment: ColourAssignment | Sequence[int]) -> bool:
    """True iff ``assignment`` is proper on the family graph and its class
    sizes (as a multiset) equal the ones stated for the claim.

    Raises :class:`~chromcurl.chroma.ImproperColouring` on a monochromatic edge.
    """
    if not isinstance(assignment, ColourAssignment):
        assignment = ColourAssignment(tuple(assignment))
    g = generate(FamilySpec(family, n))
    sizes = class_sizes(g, assignment)
    return tuple(sorted(sizes, reverse=True)) == stated_theta(family, n)


# -- report rendering -------------------------------------------------------

def _fmt_pair(a, b) -> str:
    return "-" if a is None else f"{a},{b}"


def render_table(records: Sequence[VerdictRecord]) -> str:
    header = ["family", "n", "|V|", "chi", "theta", "claimed", "engine", "oracle", "verdict", "case"]
    rows = [header]
    for r in records:
        rows.append([
            r.family.value, str(r.n), str(r.order), str(r.chi),
            "(" + ",".join(map(str, r.theta)) + ")",
            _fmt_pair(r.claim.claimed_cn, r.claim.claimed_cnc),
            _fmt_pair(r.computed_cn, r.computed_cnc),
            _fmt_pair(r.oracle_cn, r.oracle_cnc),
            r.verdict.value, r.claim.source,
        ])
    widths = [max(len(row[i]) for row in rows) for i in range(len(header))]
    lines = ["  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() for row in rows]
    counts = {v: sum(r.verdict is v for r in records) for v in Verdict}
    lines.append("")
    lines.append("  ".join(f"{v.value}={c}" for v, c in counts.items()))
    return "\n".join(lines) + "\n"


def render_jsonl(records: Sequence[VerdictRecord]) -> str:
    return "".join(json.dumps(r.as_dict(), separators=(",", ":")) + "\n" for r in records)


def render_csv(records: Sequence[VerdictRecord]) -> str:
    buf = io.StringIO()
    rows = [r.as_dict() for r in records]
    fields = list(rows[0]) if rows else ["family", "n", "verdict"]
    w = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
    w.writeheader()
    for row in rows:
        row["theta"] = " ".join(map(str, row["theta"]))
        w.writerow(row)
    return buf.getvalue()


def has_engine_failure(records: Iterable[VerdictRecord]) -> bool:
    return any(r.verdict is Verdict.ENGINE_ORACLE_MISMATCH for r in records)
