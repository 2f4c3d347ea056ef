"""Grouping of solutions that share curvature and charge"""
import logging
from collections import defaultdict
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, computed_field, model_validator

from ..invariants.exact import beta_invariants
from ..invariants.records import Rational
from ..invariants.selection import BetaVector, GridLabel
from .enumeration import grids_with_prefix, prefixes

logger = logging.getLogger(__name__)

GROUP_KEYS = ("rq", "r")

# key -> [(grid, q, h2)]
Partial = Dict[Tuple, List[Tuple[Tuple[int, ...], int, Fraction]]]


class CoincidenceGroup(BaseModel):
    """Non-equivalent solutions of G(m,n) sharing r (and q unless grouped by r alone)"""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    n: int
    m: int
    r: Rational
    q: Optional[int] = None
    members: Tuple[GridLabel, ...]
    q_values: Tuple[int, ...]
    h2_values: Tuple[Rational, ...]

    @model_validator(mode='after')
    def validate_members(self):
        if not len(self.members) == len(self.q_values) == len(self.h2_values):
            raise ValueError("members, q_values and h2_values must align")
        if self.q is not None and any(q != self.q for q in self.q_values):
            raise ValueError(f"All members must share q={self.q}")
        return self

    @computed_field
    @property
    def fully_separated(self) -> bool:
        return len(set(self.h2_values)) == len(self.h2_values)

    @property
    def q_separated(self) -> bool:
        return len(set(self.q_values)) == len(self.q_values)


def _key(record, by: str) -> Tuple:
    return (record.r, record.q) if by == "rq" else (record.r,)


def validate_grouping(by: str) -> None:
    if by not in GROUP_KEYS:
        raise ValueError(f"Unknown grouping key '{by}', expected one of {GROUP_KEYS}")


def group_partition(n: int, m: int, first: int, by: str = "rq") -> Partial:
    """Exact invariants of every canonical grid starting at `first`, keyed for grouping"""
    partial: Partial = defaultdict(list)
    for grid in grids_with_prefix(n, m, first, canonical=True):
        record = beta_invariants(BetaVector.from_grid(n, grid))
        partial[_key(record, by)].append((grid, record.q, record.h2))
    return dict(partial)


def merge_partials(n: int, m: int, partials: Iterable[Partial], by: str = "rq") -> List[CoincidenceGroup]:
    """Merge partition results by exact key; order does not depend on the partials' order"""
    merged: Partial = defaultdict(list)
    for partial in partials:
        for key, entries in partial.items():
            merged[key].extend(entries)

    groups = []
    for key in sorted(merged):
        entries = sorted(merged[key])
        if len(entries) < 2:
            continue
        groups.append(CoincidenceGroup(
            n=n, m=m, r=key[0], q=key[1] if by == "rq" else None,
            members=tuple(GridLabel(indices=g) for g, _, _ in entries),
            q_values=tuple(q for _, q, _ in entries),
            h2_values=tuple(h2 for _, _, h2 in entries),
        ))
    return groups


def coincidences(n: int, m: int, by: str = "rq") -> List[CoincidenceGroup]:
    """Groups of complement-canonical solutions sharing an exact key, in-process"""
    validate_grouping(by)
    partials = [group_partition(n, m, first, by) for first in prefixes(n, m)]
    groups = merge_partials(n, m, partials, by)
    logger.debug(f"G({m},{n}): {len(groups)} coincidence groups by {by}")
    return groups
