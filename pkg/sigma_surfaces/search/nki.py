"""Three-step coincidence analysis in G(2,n).

A pair P_{i,i+1} and P_{k,l} with l > k+1 can only share (r, q) when
l = 2i - k + 1 and n = n_{k,i} = 3i + 1 - 4k + 2k(1+k)/(1+i).
"""
import logging
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, model_validator
from sympy import factorint

from ..config.config import SEARCH_CONFIG
from ..exceptions import IndexRangeError
from ..invariants.exact import g2_closed_forms
from ..invariants.records import Rational

logger = logging.getLogger(__name__)


def n_ki(k: int, i: int) -> Fraction:
    """3i + 1 - 4k + 2k(1+k)/(1+i), exact"""
    if k < 0:
        raise IndexRangeError(f"k must be non-negative, got {k}")
    if i <= k:
        raise IndexRangeError(f"need i > k, got k={k}, i={i}")
    return 3 * i + 1 - 4 * k + Fraction(2 * k * (1 + k), 1 + i)


def l_ki(k: int, i: int) -> int:
    return 2 * i - k + 1


def default_i_max(k_max: int) -> int:
    return 2 * k_max * (1 + k_max)


class NkiRecord(BaseModel):
    """One integral (k, i) with the candidate pair (i, i+1) vs (k, l) in G(2, n)"""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    k: int
    i: int
    n: int
    l: int
    admissible: bool
    r: Optional[Rational] = None
    q: Optional[int] = None
    h2_pair: Optional[Tuple[Rational, Rational]] = None
    family: Optional[str] = None

    @model_validator(mode='after')
    def validate_record(self):
        if n_ki(self.k, self.i) != self.n:
            raise ValueError(f"n={self.n} is not n_(k,i) for k={self.k}, i={self.i}")
        if self.l != l_ki(self.k, self.i):
            raise ValueError(f"l must equal 2i-k+1={l_ki(self.k, self.i)}")
        if self.admissible and self.h2_pair is None:
            raise ValueError("Admissible records carry their H^2 pair")
        return self

    @property
    def adjacent_grid(self) -> Tuple[int, int]:
        return (self.i, self.i + 1)

    @property
    def gap_grid(self) -> Tuple[int, int]:
        return (self.k, self.l)

    @property
    def separated(self) -> bool:
        return self.h2_pair is not None and self.h2_pair[0] != self.h2_pair[1]


def is_admissible(k: int, i: int, n: int) -> bool:
    """Both grids fit in G(2,n): l <= n-1 and i+1 <= n-1"""
    return l_ki(k, i) <= n - 1 and i + 1 <= n - 1


def nki_record(k: int, i: int, family: Optional[str] = None) -> Optional[NkiRecord]:
    """Record for (k, i), or None when n_{k,i} is not an integer"""
    n = n_ki(k, i)
    if n.denominator != 1:
        return None
    n = int(n)
    l = l_ki(k, i)
    if not is_admissible(k, i, n):
        return NkiRecord(k=k, i=i, n=n, l=l, admissible=False, family=family)

    adjacent = g2_closed_forms(i, i + 1, n)
    gap = g2_closed_forms(k, l, n)
    if (adjacent.r, adjacent.q) != (gap.r, gap.q):
        raise ArithmeticError(
            f"(k={k}, i={i}, n={n}): (r, q) differ, {adjacent.r},{adjacent.q} vs {gap.r},{gap.q}"
        )
    return NkiRecord(k=k, i=i, n=n, l=l, admissible=True, r=adjacent.r, q=adjacent.q,
                     h2_pair=(adjacent.h2, gap.h2), family=family)


def nki_scan(k_max: Optional[int] = None, i_max: Optional[int] = None) -> List[NkiRecord]:
    """Every integral (k, i) with 0 <= k <= k_max and k < i <= i_max"""
    k_max = SEARCH_CONFIG["k_max"] if k_max is None else k_max
    i_max = default_i_max(k_max) if i_max is None else i_max
    if k_max < 0 or i_max < 1:
        raise IndexRangeError(f"scan bounds must be k_max >= 0 and i_max >= 1, got {k_max}, {i_max}")

    records = []
    for k in range(k_max + 1):
        for i in range(k + 1, i_max + 1):
            record = nki_record(k, i)
            if record is not None:
                records.append(record)
    logger.info(f"n_(k,i) scan k<={k_max}, i<={i_max}: {len(records)} integral, "
                f"{sum(r.admissible for r in records)} admissible")
    return records


# (label, minimum parameter, (k, i) as a function of the parameter)
FAMILIES = {
    "by_k": (
        ("i=2k(1+k)-1", 1, lambda k: (k, 2 * k * (1 + k) - 1)),
        ("i=k(1+k)-1", 2, lambda k: (k, k * (1 + k) - 1)),
        ("i=2k+1", 0, lambda k: (k, 2 * k + 1)),
        ("i=2k-1", 2, lambda k: (k, 2 * k - 1)),
    ),
    "by_m": (
        ("k=2m+1,i=m(2m+3)", 2, lambda m: (2 * m + 1, m * (2 * m + 3))),
        ("k=2m,i=m(2m+1)-1", 2, lambda m: (2 * m, m * (2 * m + 1) - 1)),
    ),
}


def family_rows(param: int, which: str, rows: Optional[Sequence[int]] = None) -> List[NkiRecord]:
    """Instantiate the parametric families at k ("by_k") or m ("by_m").

    "by_m" holds the families where 4 divides 2k(1+k). Rows are numbered
    from 1. Without `rows`, every row whose range contains `param` is returned.
    The last "by_k" row always has l = n and comes back inadmissible.
    """
    if which not in FAMILIES:
        raise IndexRangeError(f"unknown family {which!r}, expected one of {sorted(FAMILIES)}")
    table = FAMILIES[which]
    if rows is None:
        selected = [row for row in table if param >= row[1]]
    else:
        selected = []
        for number in rows:
            if not 1 <= number <= len(table):
                raise IndexRangeError(f"{which} has no row {number}")
            label, minimum, _ = table[number - 1]
            if param < minimum:
                raise IndexRangeError(f"{label} needs parameter >= {minimum}, got {param}")
            selected.append(table[number - 1])

    records = []
    for label, _, parametrize in selected:
        k, i = parametrize(param)
        record = nki_record(k, i, family=label)
        if record is None:
            raise ArithmeticError(f"{label} at {param} gives non-integral n_(k,i)")
        records.append(record)
    return records


class CensusRow(BaseModel):
    model_config = ConfigDict(frozen=True)

    k: int
    product: int
    factorization: Dict[int, int]
    integral: int
    admissible: int
    admissible_i: Tuple[int, ...]


def divisor_census(k_max: Optional[int] = None) -> List[CensusRow]:
    """Per k >= 1: prime decomposition of 2k(1+k) and the counts of integral and admissible i"""
    k_max = SEARCH_CONFIG["k_max"] if k_max is None else k_max
    rows = []
    for k in range(1, k_max + 1):
        product = 2 * k * (1 + k)
        records = [r for r in (nki_record(k, i) for i in range(k + 1, product + 1)) if r]
        rows.append(CensusRow(
            k=k,
            product=product,
            factorization={int(p): int(e) for p, e in factorint(product).items()},
            integral=len(records),
            admissible=sum(r.admissible for r in records),
            admissible_i=tuple(r.i for r in records if r.admissible),
        ))
    return rows
