"""Explicit holomorphic G(2,5) frames with r = 5 that are not Veronese-based.

Entries are monomials c x+^p with real c. Each c is stored as a sign and the
exact rational c^2, so the Gram matrix Z^dagger Z has exact rational
coefficients and only the frame itself is ever rounded.
"""
import logging
from fractions import Fraction
from functools import lru_cache
from math import isqrt
from typing import Dict, List, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, field_validator, model_validator

from ..config.config import FRAME_CONFIG
from ..exceptions import SingularPointError
from ..invariants.records import Rational
from ..oracle.tower import HermitianProjector

logger = logging.getLogger(__name__)

# (conj power, power) -> exact coefficient
GramEntry = Dict[Tuple[int, int], Fraction]


def exact_sqrt(value: Fraction) -> Fraction:
    """Square root of a rational that is a perfect square"""
    if value < 0:
        raise ValueError(f"{value} has no real square root")
    num, den = isqrt(value.numerator), isqrt(value.denominator)
    if num * num != value.numerator or den * den != value.denominator:
        raise ValueError(f"{value} is not the square of a rational")
    return Fraction(num, den)


class FrameTerm(BaseModel):
    """sign * sqrt(square) * x+^power"""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    sign: int = 1
    square: Rational
    power: int

    @field_validator('sign')
    @classmethod
    def validate_sign(cls, v):
        if v not in (-1, 1):
            raise ValueError("Sign must be +1 or -1")
        return v

    @field_validator('square')
    @classmethod
    def validate_square(cls, v):
        if v <= 0:
            raise ValueError("Squared coefficient must be positive")
        return v

    @field_validator('power')
    @classmethod
    def validate_power(cls, v):
        if v < 0:
            raise ValueError("Powers must be non-negative")
        return v

    @property
    def coefficient(self) -> float:
        return self.sign * float(np.sqrt(float(self.square)))


Entry = Tuple[FrameTerm, ...]


class HoloFrame(BaseModel):
    """n x m matrix of real-coefficient polynomials in x+"""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    name: str
    n: int
    m: int
    entries: Tuple[Tuple[Entry, ...], ...]

    @model_validator(mode='after')
    def validate_shape(self):
        if not 1 <= self.m < self.n:
            raise ValueError(f"Need 1 <= m < n, got m={self.m}, n={self.n}")
        if len(self.entries) != self.n or any(len(row) != self.m for row in self.entries):
            raise ValueError(f"Frame entries must form a {self.n} x {self.m} matrix")
        return self

    def entry(self, row: int, col: int) -> Entry:
        return self.entries[row][col]

    def evaluate(self, x: complex) -> np.ndarray:
        """Numeric n x m matrix Z(x)"""
        x = complex(x)
        Z = np.zeros((self.n, self.m), dtype=complex)
        for a, row in enumerate(self.entries):
            for b, terms in enumerate(row):
                Z[a, b] = sum(t.coefficient * x ** t.power for t in terms)
        return Z

    def gram_terms(self) -> Tuple[Tuple[GramEntry, ...], ...]:
        return _gram_terms(self)

    def gram(self, x: complex) -> np.ndarray:
        """Z^dagger Z evaluated from its exact coefficients"""
        x = complex(x)
        xbar = x.conjugate()
        return np.array([
            [sum(float(c) * xbar ** p * x ** q for (p, q), c in entry.items())
             for entry in row]
            for row in self.gram_terms()
        ], dtype=complex)


@lru_cache(maxsize=8)
def _gram_terms(frame: HoloFrame) -> Tuple[Tuple[GramEntry, ...], ...]:
    rows = []
    for a in range(frame.m):
        row = []
        for b in range(frame.m):
            entry: GramEntry = {}
            for r in range(frame.n):
                for s in frame.entry(r, a):
                    for t in frame.entry(r, b):
                        c = s.sign * t.sign * exact_sqrt(s.square * t.square)
                        key = (s.power, t.power)
                        entry[key] = entry.get(key, Fraction(0)) + c
            row.append({k: v for k, v in entry.items() if v != 0})
        rows.append(tuple(row))
    return tuple(rows)


def _term(square, power: int, sign: int = 1) -> Entry:
    return (FrameTerm(sign=sign, square=Fraction(square), power=power),)


def _frame(name: str, rows: List[Tuple[Entry, Entry]]) -> HoloFrame:
    return HoloFrame(name=name, n=len(rows), m=2, entries=tuple(tuple(r) for r in rows))


def frame_z1() -> HoloFrame:
    """Columns (1, 0, sqrt5 x, sqrt5 x^2, 0) and (0, 1, sqrt5 x^2, 7/sqrt5 x^3, 1/sqrt5 x^3)"""
    return _frame("z1", [
        (_term(1, 0), ()),
        ((), _term(1, 0)),
        (_term(5, 1), _term(5, 2)),
        (_term(5, 2), _term(Fraction(49, 5), 3)),
        ((), _term(Fraction(1, 5), 3)),
    ])


def frame_z2() -> HoloFrame:
    """Columns (1, 0, x, x^2/sqrt5, 0) and (0, 1, 2x, 7/sqrt5 x^2, sqrt5 x^3)"""
    return _frame("z2", [
        (_term(1, 0), ()),
        ((), _term(1, 0)),
        (_term(1, 1), _term(4, 1)),
        (_term(Fraction(1, 5), 2), _term(Fraction(49, 5), 2)),
        ((), _term(5, 3)),
    ])


FRAMES = {"z1": frame_z1, "z2": frame_z2}


def get_frame(name: str) -> HoloFrame:
    try:
        return FRAMES[name.lower()]()
    except KeyError:
        raise ValueError(f"Unknown frame '{name}', expected one of {sorted(FRAMES)}") from None


def _projector_matrix(frame: HoloFrame, x: complex) -> np.ndarray:
    Z = frame.evaluate(x)
    G = frame.gram(x)
    rcond = 1.0 / np.linalg.cond(G)
    if not np.isfinite(rcond) or rcond < FRAME_CONFIG["rcond_threshold"]:
        raise SingularPointError(complex(x), f"Gram matrix of frame {frame.name} has rcond {rcond:.3e}")
    return Z @ np.linalg.solve(G, Z.conj().T)


def projector_from_frame(frame: HoloFrame, x: complex) -> HermitianProjector:
    """P = Z (Z^dagger Z)^(-1) Z^dagger"""
    return HermitianProjector(matrix=_projector_matrix(frame, x), rank=frame.m)


class FrameField:
    """Projector field of a holomorphic frame"""

    def __init__(self, frame: HoloFrame):
        self.frame = frame

    @property
    def dimension(self) -> int:
        return self.frame.n

    @property
    def rank(self) -> int:
        return self.frame.m

    def at(self, x: complex) -> np.ndarray:
        return _projector_matrix(self.frame, x)

    def __repr__(self):
        return f"FrameField({self.frame.name})"
