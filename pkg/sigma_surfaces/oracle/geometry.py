"""Finite-difference densities and curvatures of projector fields.

Every estimate works on a field x -> P(x) and needs nothing but point
evaluation, so Veronese solutions and explicit frames go through the same
pipeline. With x+ = x + iy:

    L = 1/2 Tr(d+P d-P) = g+-
    Q = 1/2 Tr(P [d-P, d+P])
    K = -(1/g+-) d+d- ln g+-
    H = 2 ||[d+P, d-P]|| / Tr(d+P d-P),   ||A||^2 = 1/2 Tr(A^2)
"""
import logging
from typing import Optional, Protocol, Tuple, runtime_checkable

import numpy as np
from pydantic import BaseModel, ConfigDict, field_validator

from ..config.config import NUMERIC_CONFIG
from ..exceptions import DegenerateMetricError
from ..invariants.selection import BetaVector
from .curves import PolyCurve
from .differences import five_point_laplacian, wirtinger
from .tower import conformal_factor, tower_directions

logger = logging.getLogger(__name__)

_METRIC_FLOOR = 1e-14


@runtime_checkable
class ProjectorField(Protocol):
    """Anything that can be sampled as an n x n projector of rank m"""

    @property
    def dimension(self) -> int: ...

    @property
    def rank(self) -> int: ...

    def at(self, x: complex) -> np.ndarray: ...


@runtime_checkable
class TowerMetricField(ProjectorField, Protocol):
    """A projector field that also knows g+- pointwise"""

    def metric_at(self, x: complex) -> float: ...


class DensityEstimate(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    value: float
    step: float
    point: complex

    @field_validator('value')
    @classmethod
    def validate_value(cls, v):
        if not np.isfinite(v):
            raise ValueError("Density estimate is not finite")
        return v

    @field_validator('step')
    @classmethod
    def validate_step(cls, v):
        if not v > 0:
            raise ValueError("Step must be positive")
        return v

    def coefficient(self) -> float:
        """value * 2(1+|x|^2)^2, the constant r or q of a Veronese solution"""
        return self.value * 2.0 * conformal_factor(self.point)


class CurvatureEstimate(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    value: float
    step: float
    point: complex
    metric: Optional[float] = None

    @field_validator('value')
    @classmethod
    def validate_value(cls, v):
        if not np.isfinite(v):
            raise ValueError("Curvature estimate is not finite")
        return v


def su_inner(a: np.ndarray, b: np.ndarray) -> complex:
    """<A, B> = 1/2 Tr(AB)"""
    return 0.5 * np.trace(a @ b)


def su_norm(a: np.ndarray) -> float:
    return float(np.sqrt(max(su_inner(a, a).real, 0.0)))


def hermitian_part(a: np.ndarray) -> np.ndarray:
    return 0.5 * (a + a.conj().T)


def _richardson(richardson: Optional[bool]) -> bool:
    return NUMERIC_CONFIG["richardson"] if richardson is None else richardson


def field_derivatives(field: ProjectorField, x: complex, h: float,
                      richardson: Optional[bool] = None) -> Tuple[np.ndarray, np.ndarray]:
    """(d+P, d-P) at x"""
    return wirtinger(field.at, complex(x), h, _richardson(richardson))


def _lagrangian_value(field: ProjectorField, x: complex, h: float,
                      richardson: Optional[bool]) -> float:
    dp, dm = field_derivatives(field, x, h, richardson)
    return float(0.5 * np.trace(dp @ dm).real)


def metric(field: ProjectorField, x: complex, h: float,
           richardson: Optional[bool] = None) -> float:
    """g+- = 1/2 Tr(d+X d-X), equal to the Lagrangian density"""
    g = _lagrangian_value(field, x, h, richardson)
    if not np.isfinite(g) or g <= _METRIC_FLOOR:
        raise DegenerateMetricError(f"g+- = {g!r} at x={complex(x)!r}")
    return g


def density_lagrangian(field: ProjectorField, x: complex, h: float,
                       richardson: Optional[bool] = None) -> DensityEstimate:
    """L = 1/2 Tr(d+P d-P)"""
    value = _lagrangian_value(field, x, h, richardson)
    return DensityEstimate(value=value, step=h, point=complex(x))


def density_topological(field: ProjectorField, x: complex, h: float,
                        richardson: Optional[bool] = None) -> DensityEstimate:
    """Q = 1/2 Tr(P [d-P, d+P])"""
    P = field.at(complex(x))
    dp, dm = field_derivatives(field, x, h, richardson)
    value = float(0.5 * np.trace(P @ (dm @ dp - dp @ dm)).real)
    return DensityEstimate(value=value, step=h, point=complex(x))


def density_topological_log(curve: PolyCurve, beta: BetaVector, x: complex, h: float,
                            richardson: Optional[bool] = None) -> DensityEstimate:
    """Q = d+d- ln prod_j |P+^j f|^beta_j, read off the Gram tower"""
    weights = np.array(beta.bits, dtype=float)

    def log_product(z: complex) -> float:
        _, norms = tower_directions(curve, complex(z))
        return float(weights @ np.log(norms))

    lap = five_point_laplacian(log_product, complex(x), h, _richardson(richardson))
    return DensityEstimate(value=0.25 * float(lap), step=h, point=complex(x))


def _pointwise_metric(field: ProjectorField, h: float, richardson: bool):
    """z -> g+-(z), from tower data when the field has it"""
    if isinstance(field, TowerMetricField):
        def tower_metric(z: complex) -> float:
            g = field.metric_at(z)
            if not np.isfinite(g) or g <= _METRIC_FLOOR:
                raise DegenerateMetricError(f"g+- = {g!r} at x={complex(z)!r}")
            return g
        return tower_metric
    return lambda z: metric(field, z, h, richardson)


def curvature_gaussian(field: ProjectorField, x: complex, h: float,
                       richardson: Optional[bool] = None) -> CurvatureEstimate:
    """K = -(1/g+-) d+d- ln g+-

    Fields exposing `metric_at` give g+- without differencing. Otherwise g+-
    carries rounding of order eps/h, and ln g+- is differenced on a wider
    outer stencil.
    """
    richardson = _richardson(richardson)
    x = complex(x)
    point_metric = _pointwise_metric(field, h, richardson)
    g = point_metric(x)
    outer = NUMERIC_CONFIG["curvature_step_factor"] * h

    def log_metric(z: complex) -> float:
        return float(np.log(point_metric(z)))

    lap = five_point_laplacian(log_metric, x, outer, richardson)
    value = -0.25 * float(lap) / g
    logger.debug(f"K({x}) = {value:.12g} with g+- = {g:.6g}")
    return CurvatureEstimate(value=value, step=h, point=x, metric=g)


def curvature_mean(field: ProjectorField, x: complex, h: float,
                   richardson: Optional[bool] = None) -> CurvatureEstimate:
    """H = 2 ||[d+P, d-P]|| / Tr(d+P d-P)"""
    x = complex(x)
    dp, dm = field_derivatives(field, x, h, richardson)
    trace = float(np.trace(dp @ dm).real)
    if not np.isfinite(trace) or trace <= 2 * _METRIC_FLOOR:
        raise DegenerateMetricError(f"Tr(d+P d-P) = {trace!r} at x={x!r}")
    commutator = hermitian_part(dp @ dm - dm @ dp)
    value = 2.0 * su_norm(commutator) / trace
    return CurvatureEstimate(value=value, step=h, point=x, metric=0.5 * trace)


def el_residual(field: ProjectorField, x: complex, h: float,
                richardson: Optional[bool] = None) -> float:
    """||[d+d-P, P]|| (Frobenius), zero for harmonic maps"""
    x = complex(x)
    P = field.at(x)
    lap = 0.25 * five_point_laplacian(field.at, x, h, _richardson(richardson))
    return float(np.linalg.norm(lap @ P - P @ lap))


def surface_tangent_normal(field: ProjectorField, x: complex, h: float,
                           richardson: Optional[bool] = None):
    """((d+X, d-X), N) with d+X = [d+P, P], d-X = -[d-P, P] and unit normal N"""
    x = complex(x)
    P = field.at(x)
    dp, dm = field_derivatives(field, x, h, richardson)
    dx_plus = dp @ P - P @ dp
    dx_minus = -(dm @ P - P @ dm)
    bracket = hermitian_part(dx_plus @ dx_minus - dx_minus @ dx_plus)
    size = su_norm(bracket)
    if not np.isfinite(size) or size <= _METRIC_FLOOR:
        raise DegenerateMetricError(f"[d+X, d-X] vanishes at x={x!r}")
    return (dx_plus, dx_minus), bracket / size


def conformality(field: ProjectorField, x: complex, h: float,
                 richardson: Optional[bool] = None) -> Tuple[float, float]:
    """(|g++|, |g--|) relative to g+-; both vanish for conformal immersions"""
    (dx_plus, dx_minus), _ = surface_tangent_normal(field, x, h, richardson)
    g = su_inner(dx_plus, dx_minus).real
    if not np.isfinite(g) or g <= _METRIC_FLOOR:
        raise DegenerateMetricError(f"g+- = {g!r} at x={complex(x)!r}")
    g_pp = abs(su_inner(dx_plus, dx_plus))
    g_mm = abs(su_inner(dx_minus, dx_minus))
    return float(g_pp / g), float(g_mm / g)
