from functools import lru_cache
from math import comb, sqrt
from typing import Annotated, Any, Tuple

import numpy as np
from pydantic import BaseModel, BeforeValidator, ConfigDict, field_validator


def _as_complex_rows(value: Any) -> Tuple[Tuple[complex, ...], ...]:
    return tuple(tuple(complex(c) for c in row) for row in value)


class PolyCurve(BaseModel):
    """Holomorphic curve f: C -> C^n, one polynomial per component.

    Coefficients are stored in ascending powers of x+.
    """
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    components: Annotated[Tuple[Tuple[complex, ...], ...], BeforeValidator(_as_complex_rows)]

    @field_validator('components')
    @classmethod
    def validate_components(cls, v):
        if len(v) < 2:
            raise ValueError("A curve needs at least two components")
        if all(c == 0 for row in v for c in row):
            raise ValueError("Components must not all vanish")
        return v

    @property
    def n(self) -> int:
        return len(self.components)

    @property
    def degree(self) -> int:
        return max(
            (p for row in self.components for p, c in enumerate(row) if c != 0),
            default=0,
        )

    def evaluate(self, x: complex) -> np.ndarray:
        return derivative_columns(self, x, 0)[:, 0]

    def derivative_stack(self, x: complex, order: int) -> "DerivativeStack":
        return DerivativeStack(point=complex(x), columns=derivative_columns(self, x, order))


class DerivativeStack(BaseModel):
    """Columns f, f', ..., f^(K) evaluated at one point"""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    point: complex
    columns: np.ndarray

    @property
    def order(self) -> int:
        return self.columns.shape[1] - 1


@lru_cache(maxsize=256)
def _coefficients(curve: PolyCurve) -> np.ndarray:
    width = curve.degree + 1
    table = np.zeros((curve.n, width), dtype=complex)
    for r, row in enumerate(curve.components):
        table[r, :min(len(row), width)] = row[:width]
    return table


@lru_cache(maxsize=64)
def _falling_factorials(degree: int, order: int) -> np.ndarray:
    """table[k, p] = p!/(p-k)! (zero when p < k)"""
    table = np.zeros((order + 1, degree + 1))
    for k in range(order + 1):
        for p in range(k, degree + 1):
            table[k, p] = float(np.prod(np.arange(p - k + 1, p + 1), dtype=float))
    return table


def derivative_columns(curve: PolyCurve, x: complex, order: int) -> np.ndarray:
    """n x (order+1) matrix whose k-th column is f^(k)(x)"""
    coeffs = _coefficients(curve)
    degree = coeffs.shape[1] - 1
    ff = _falling_factorials(degree, order)
    powers = np.cumprod(np.concatenate(([1.0 + 0j], np.full(degree, complex(x)))))
    stack = np.zeros((curve.n, order + 1), dtype=complex)
    for k in range(min(order, degree) + 1):
        shifted = np.zeros(degree + 1, dtype=complex)
        shifted[k:] = ff[k, k:] * powers[:degree + 1 - k]
        stack[:, k] = coeffs @ shifted
    return stack


def veronese_curve(n: int) -> PolyCurve:
    """Component r is sqrt(binom(n-1, r)) x+^r"""
    if n < 2:
        raise ValueError(f"The Veronese curve needs n >= 2, got {n}")
    rows = []
    for r in range(n):
        row = [0.0] * (r + 1)
        row[r] = sqrt(comb(n - 1, r))
        rows.append(tuple(row))
    return PolyCurve(components=tuple(rows))
