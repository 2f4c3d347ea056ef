from itertools import combinations
from typing import Iterator, List, Tuple

from pydantic import BaseModel, ConfigDict

from ..exceptions import IndexRangeError
from ..invariants.selection import BetaVector, GridLabel


def _check_weight(n: int, m: int) -> None:
    if not 1 <= m < n:
        raise IndexRangeError(f"need 1 <= m < n, got m={m}, n={n}")


def _complement_grid(grid: Tuple[int, ...], n: int) -> Tuple[int, ...]:
    chosen = set(grid)
    return tuple(j for j in range(n) if j not in chosen)


def _reversed_grid(grid: Tuple[int, ...], n: int) -> Tuple[int, ...]:
    return tuple(sorted(n - 1 - j for j in grid))


def is_complement_canonical(grid: Tuple[int, ...], n: int) -> bool:
    """True unless the complement is a same-weight grid that sorts first"""
    if 2 * len(grid) != n:
        return True
    return grid <= _complement_grid(grid, n)


def prefixes(n: int, m: int) -> List[int]:
    """Possible first indices i1, one enumeration partition each"""
    _check_weight(n, m)
    return list(range(n - m + 1))


def grids_with_prefix(n: int, m: int, first: int, canonical: bool = False) -> Iterator[Tuple[int, ...]]:
    """Grids (first, i2, ..., im) in lexicographic order"""
    for rest in combinations(range(first + 1, n), m - 1):
        grid = (first,) + rest
        if canonical and not is_complement_canonical(grid, n):
            continue
        yield grid


def enumerate_betas(n: int, m: int, canonical: bool = False) -> Iterator[BetaVector]:
    """All C(n, m) selections in lexicographic grid order.

    With canonical=True and 2m = n only the member of each complement pair
    with the smaller grid is kept.
    """
    for first in prefixes(n, m):
        for grid in grids_with_prefix(n, m, first, canonical):
            yield BetaVector.from_grid(n, grid)


class SymmetryClass(BaseModel):
    """Grids related by reversal and, when 2m = n, by complement"""
    model_config = ConfigDict(frozen=True)

    n: int
    representative: GridLabel
    members: Tuple[GridLabel, ...]


def _preference(grid: Tuple[int, ...]):
    adjacent = len(grid) == 2 and grid[1] == grid[0] + 1
    return (0 if adjacent else 1, grid)


def symmetry_classes(n: int, m: int) -> List[SymmetryClass]:
    """Orbits of G(m,n) grids, adjacent representatives first"""
    _check_weight(n, m)
    seen = set()
    classes = []
    for grid in combinations(range(n), m):
        if grid in seen:
            continue
        orbit = {grid, _reversed_grid(grid, n)}
        if 2 * m == n:
            orbit |= {_complement_grid(g, n) for g in list(orbit)}
        seen |= orbit
        ordered = sorted(orbit, key=_preference)
        classes.append(SymmetryClass(
            n=n,
            representative=GridLabel(indices=ordered[0]),
            members=tuple(GridLabel(indices=g) for g in sorted(orbit)),
        ))
    classes.sort(key=lambda c: _preference(c.representative.indices))
    return classes
