"""Central differences in the real coordinates of x+ = x + iy.

d+ = (d_x - i d_y)/2, d- = (d_x + i d_y)/2 and d+d- = (d_xx + d_yy)/4.
"""
from typing import Callable, Tuple, TypeVar, Union

import numpy as np

from ..exceptions import StepSizeError

Value = TypeVar("Value", float, complex, np.ndarray)
Sampler = Callable[[complex], Union[float, np.ndarray]]


def _checked(value, h: float):
    if not np.all(np.isfinite(value)):
        raise StepSizeError(f"non-finite difference quotient at step h={h:.3e}")
    return value


def _require_step(h: float) -> None:
    if not h > 0 or not np.isfinite(h):
        raise StepSizeError(f"step must be positive and finite, got {h!r}")


def extrapolate(coarse: Value, fine: Value) -> Value:
    """Richardson (h, h/2) for an O(h^2) scheme"""
    return fine + (fine - coarse) / 3.0


def central_partials(at: Sampler, x: complex, h: float):
    """(d_x F, d_y F) by central differences"""
    _require_step(h)
    dx = (at(x + h) - at(x - h)) / (2.0 * h)
    dy = (at(x + 1j * h) - at(x - 1j * h)) / (2.0 * h)
    return _checked(dx, h), _checked(dy, h)


def wirtinger(at: Sampler, x: complex, h: float, richardson: bool = True) -> Tuple:
    """(d+ F, d- F)"""
    dx, dy = central_partials(at, x, h)
    if richardson:
        fdx, fdy = central_partials(at, x, h / 2.0)
        dx, dy = extrapolate(dx, fdx), extrapolate(dy, fdy)
    return 0.5 * (dx - 1j * dy), 0.5 * (dx + 1j * dy)


def _five_point(at: Sampler, x: complex, h: float):
    centre = at(x)
    ring = at(x + h) + at(x - h) + at(x + 1j * h) + at(x - 1j * h)
    return _checked((ring - 4.0 * centre) / (h * h), h)


def five_point_laplacian(at: Sampler, x: complex, h: float, richardson: bool = True):
    """d_xx F + d_yy F"""
    _require_step(h)
    lap = _five_point(at, x, h)
    if richardson:
        lap = extrapolate(lap, _five_point(at, x, h / 2.0))
    return lap
