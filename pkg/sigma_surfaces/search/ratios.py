"""Quartic ratio identities between the H^2 of coinciding pairs.

For n = 3i+1 the pair (i, i+1), (0, 2i+1) and for n = 4+3k the pair
(1+2k, 2+2k), (k, 3+3k) share (r, q); the ratio of their H^2 is a rational
function of the family parameter.
"""
import logging
from fractions import Fraction
from typing import Callable, List, Optional, Tuple

import sympy
from pydantic import BaseModel, ConfigDict, computed_field

from ..config.config import SEARCH_CONFIG
from ..exceptions import IndexRangeError
from ..invariants.exact import beta_invariants
from ..invariants.records import Rational
from ..invariants.selection import BetaVector

logger = logging.getLogger(__name__)

_t = sympy.Symbol("t")


class RatioIdentity:
    """A family of G(2,n) pairs and the closed form of h2(numerator)/h2(denominator)"""

    def __init__(self, name: str, first: int, degenerate: int,
                 dimension: Callable[[int], int],
                 numerator_grid: Callable[[int], Tuple[int, int]],
                 denominator_grid: Callable[[int], Tuple[int, int]],
                 numerator: sympy.Expr, denominator: sympy.Expr):
        self.name = name
        self.first = first
        self.degenerate = degenerate
        self.dimension = dimension
        self.numerator_grid = numerator_grid
        self.denominator_grid = denominator_grid
        self.numerator = sympy.Poly(numerator, _t)
        self.denominator = sympy.Poly(denominator, _t)

    def closed_form(self, param: int) -> Fraction:
        num = int(self.numerator.eval(param))
        den = int(self.denominator.eval(param))
        return Fraction(num, den)

    def exact(self, param: int) -> Fraction:
        """h2 ratio computed from beta_invariants"""
        n = self.dimension(param)
        top = beta_invariants(BetaVector.from_grid(n, self.numerator_grid(param)))
        bottom = beta_invariants(BetaVector.from_grid(n, self.denominator_grid(param)))
        if (top.r, top.q) != (bottom.r, bottom.q):
            raise ArithmeticError(f"{self.name} at {param}: pair does not share (r, q)")
        return top.h2 / bottom.h2

    def equality_roots(self) -> List[Fraction]:
        """Rational roots of numerator - denominator"""
        difference = self.numerator - self.denominator
        roots = [r for r in sympy.roots(difference, filter='Q')]
        return sorted(Fraction(int(r.p), int(r.q)) for r in roots)


IDENTITIES = (
    RatioIdentity(
        name="n=3i+1",
        first=1,
        degenerate=1,
        dimension=lambda i: 3 * i + 1,
        numerator_grid=lambda i: (0, 2 * i + 1),
        denominator_grid=lambda i: (i, i + 1),
        numerator=2 + _t + 3 * _t**2 + _t**3 + 2 * _t**4,
        denominator=2 - 6 * _t + _t**2 + 8 * _t**3 + 4 * _t**4,
    ),
    RatioIdentity(
        name="n=4+3k",
        first=0,
        degenerate=0,
        dimension=lambda k: 4 + 3 * k,
        numerator_grid=lambda k: (k, 3 + 3 * k),
        denominator_grid=lambda k: (1 + 2 * k, 2 + 2 * k),
        numerator=9 + 18 * _t + 18 * _t**2 + 9 * _t**3 + 2 * _t**4,
        denominator=9 + 36 * _t + 49 * _t**2 + 24 * _t**3 + 4 * _t**4,
    ),
)


def get_identity(name: str) -> RatioIdentity:
    for identity in IDENTITIES:
        if identity.name == name:
            return identity
    raise ValueError(f"Unknown ratio identity '{name}'")


class RatioCheck(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    identity: str
    param: int
    n: int
    exact: Rational
    closed_form: Rational

    @computed_field
    @property
    def matches(self) -> bool:
        return self.exact == self.closed_form


class IdentitySummary(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    identity: str
    unit_params: Tuple[int, ...]
    expected_unit_param: int
    equality_roots: Tuple[Rational, ...]

    @computed_field
    @property
    def unit_only_at_degenerate(self) -> bool:
        return self.unit_params == (self.expected_unit_param,)


class RatioIdentityReport(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    max_param: int
    checks: Tuple[RatioCheck, ...]
    summaries: Tuple[IdentitySummary, ...]

    @computed_field
    @property
    def passed(self) -> bool:
        return (all(c.matches for c in self.checks)
                and all(s.unit_only_at_degenerate for s in self.summaries))

    def ratio(self, identity: str, param: int) -> Fraction:
        for c in self.checks:
            if c.identity == identity and c.param == param:
                return c.exact
        raise KeyError(f"No check for {identity} at {param}")

    def mismatches(self) -> List[RatioCheck]:
        return [c for c in self.checks if not c.matches]


def ratio_identities(max_param: Optional[int] = None) -> RatioIdentityReport:
    """Compare both closed forms with exact h2 ratios for every parameter up to max_param"""
    max_param = SEARCH_CONFIG["ratio_max_param"] if max_param is None else max_param
    if max_param < 1:
        raise IndexRangeError(f"max_param must be at least 1, got {max_param}")

    checks, summaries = [], []
    for identity in IDENTITIES:
        rows = []
        for param in range(identity.first, max_param + 1):
            rows.append(RatioCheck(identity=identity.name, param=param,
                                   n=identity.dimension(param),
                                   exact=identity.exact(param),
                                   closed_form=identity.closed_form(param)))
        checks.extend(rows)
        summaries.append(IdentitySummary(
            identity=identity.name,
            unit_params=tuple(c.param for c in rows if c.exact == 1),
            expected_unit_param=identity.degenerate,
            equality_roots=tuple(identity.equality_roots()),
        ))
        logger.info(f"Ratio identity {identity.name}: {len(rows)} parameters checked")

    return RatioIdentityReport(max_param=max_param, checks=tuple(checks), summaries=tuple(summaries))
