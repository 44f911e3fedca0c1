"""Published closed forms for the chromatic curling numbers of each family.

Values are evaluated in exact integer arithmetic. Each claim carries a short
source tag (family plus parity case) so reports can say which case was hit.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from typing import Iterable

from .families import Family


class UnsupportedParameter(ValueError):
    pass


@dataclass(frozen=True)
class ClaimRecord:
    family: Family
    n: int
    claimed_cn: int | None
    claimed_cnc: int | None
    source: str
    formula: str = ""


def _div(num: int, den: int) -> int:
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"{num}/{den} is not integral")
    return q


# family -> (even case, odd case); each case is (cn, cnc, formula text)
def _path(n):
    if n % 2 == 0:
        return _div(n, 2), _div(n * n, 4), "n/2 ; n^2/4"
    return _div(n + 1, 2), _div(n * n - 1, 4), "(n+1)/2 ; (n^2-1)/4"


def _cycle(n):
    if n % 2 == 0:
        return _div(n, 2), _div(n * n, 4), "n/2 ; n^2/4"
    return _div(n - 1, 2), _div((n - 1) ** 2, 4), "(n-1)/2 ; (n-1)^2/4"


def _two_rims(n):
    # shared by double wheels, closed helms and djembes
    if n % 2 == 0:
        return n, n * n, "n ; n^2"
    return n - 1, 2 * (n - 1) ** 2, "n-1 ; 2(n-1)^2"


def _helm(n):
    if n % 2 == 0:
        return n + 1, _div(n ** 3 + n ** 2, 4), "n+1 ; (n^3+n^2)/4"
    return n + 1, _div((n - 1) ** 2 * (n + 1), 4), "n+1 ; (n-1)^2(n+1)/4"


def _flower(n):
    # the proof body gives cn = n and cnc = n^3/4 (even) / n(n-1)^2/4 (odd)
    if n % 2 == 0:
        return n, _div(n ** 3, 4), "n ; n^3/4"
    return n, _div(n * (n - 1) ** 2, 4), "n ; n(n-1)^2/4"


def _sunflower(n):
    if n % 2 == 0:
        return n + 1, _div((n + 1) * n * n, 4), "n+1 ; (n+1)n^2/4"
    return n + 1, _div((n + 1) * (n - 1) ** 2, 4), "n+1 ; (n+1)(n-1)^2/4"


def _closed_sunflower(n):
    if n % 2 == 0:
        return _div(n + 2, 2), _div(n ** 3 * (n + 2), 16), "(n+2)/2 ; n^3(n+2)/16"
    return _div(n + 1, 2), _div((n + 1) ** 3 * (n - 1), 16), "(n+1)/2 ; (n+1)^3(n-1)/16"


def _antiprism(n):
    if n % 2 == 0:
        return _div(n, 2), _div(n ** 4, 16), "n/2 ; n^4/16"
    return _div(n + 1, 2), _div((n * n - 1) ** 2, 16), "(n+1)/2 ; (n^2-1)^2/16"


def _blossom(n):
    if n % 2 == 0:
        return _div(n, 2), _div(n ** 4, 16), "n/2 ; n^4/16"
    return _div(n - 1, 2), _div((n * n - 1) ** 2, 16), "(n-1)/2 ; (n^2-1)^2/16"


_CLAIMS = {
    Family.PATH: _path,
    Family.CYCLE: _cycle,
    Family.WHEEL: _cycle,  # a wheel inherits the values of its rim
    Family.DOUBLE_WHEEL: _two_rims,
    Family.HELM: _helm,
    Family.CLOSED_HELM: _two_rims,
    Family.FLOWER: _flower,
    Family.DJEMBE: _two_rims,
    Family.SUNFLOWER: _sunflower,
    Family.CLOSED_SUNFLOWER: _closed_sunflower,
    Family.ANTIPRISM: _antiprism,
    Family.BLOSSOM: _blossom,
}


def min_claim_order(family: Family) -> int:
    # the two-colour path formulas break at n = 1
    return 2 if family is Family.PATH else 3


def claimed_values(family: Family, n: int) -> ClaimRecord:
    if n < min_claim_order(family):
        raise UnsupportedParameter(
            f"no published claim for {family.value} with n={n} "
            f"(needs n >= {min_claim_order(family)})")
    cn, cnc, text = _CLAIMS[family](n)
    parity = "even" if n % 2 == 0 else "odd"
    source = f"{family.value}/{parity}"
    if family is Family.WHEEL:
        source = f"wheel=rim cycle/{parity}"
    return ClaimRecord(family, n, cn, cnc, source, text)


def stated_theta(family: Family, n: int) -> tuple[int, ...]:
    """Class sizes of the explicit colourings used to justify each claim,
    sorted in non-increasing order.

    Flower, antiprism and blossom colourings here are the published ones even
    where they use more than chi colours.
    """
    if n < min_claim_order(family):
        raise UnsupportedParameter(f"no stated colouring for {family.value}, n={n}")
    even = n % 2 == 0
    h = n // 2
    if family is Family.PATH:
        sizes = [h, h] if even else [h + 1, h]
    elif family is Family.CYCLE:
        sizes = [h, h] if even else [h, h, 1]
    elif family is Family.WHEEL:
        sizes = stated_theta(Family.CYCLE, n) + (1,)
    elif family in (Family.DOUBLE_WHEEL, Family.CLOSED_HELM, Family.DJEMBE):
        sizes = [2 * t for t in stated_theta(Family.CYCLE, n)] + [1]
    elif family in (Family.HELM, Family.SUNFLOWER):
        sizes = [n + 1] + ([h, h] if even else [h, h, 1])
    elif family is Family.FLOWER:
        sizes = [n, h, h, 1] if even else [n, h, h, 1, 1]
    elif family is Family.CLOSED_SUNFLOWER:
        sizes = [h + 1, h, h, h] if even else [h + 1, h + 1, h + 1, h]
    elif family is Family.ANTIPRISM:
        sizes = [h] * 4 if even else [h + 1, h + 1, h, h]
    elif family is Family.BLOSSOM:
        sizes = [h] * 4 + [1] if even else [h + 1, h + 1, h, h, 1]
    else:  # pragma: no cover
        raise AssertionError(family)
    return tuple(sorted(sizes, reverse=True))


def claims_table(families: Iterable[Family], n_min: int, n_max: int) -> list[ClaimRecord]:
    out = []
    for fam in families:
        for n in range(max(n_min, min_claim_order(fam)), n_max + 1):
            out.append(claimed_values(fam, n))
    return out


def claims_csv(records: Iterable[ClaimRecord]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["family", "n", "claimed_cn", "claimed_cnc", "source", "formula"])
    for r in records:
        w.writerow([r.family.value, r.n, r.claimed_cn, r.claimed_cnc, r.source, r.formula])
    return buf.getvalue()
