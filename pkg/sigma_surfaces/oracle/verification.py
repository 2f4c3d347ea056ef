"""Numeric verification of exact invariants at seeded sample points"""
import logging
from typing import List, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, computed_field

from ..config.config import NUMERIC_CONFIG, SAMPLING_CONFIG
from ..invariants.exact import alpha, beta_invariants
from ..invariants.selection import BetaVector
from .curves import PolyCurve, veronese_curve
from .geometry import (
    ProjectorField, curvature_gaussian, curvature_mean, density_lagrangian,
    density_topological, el_residual, conformality, surface_tangent_normal,
)
from .sampling import sample_points
from .tower import HermitianProjector, VeroneseField, conformal_factor, tower_directions

logger = logging.getLogger(__name__)


def relative_error(value: float, expected: float) -> float:
    """|value - expected| / max(|expected|, 1)"""
    return abs(value - expected) / max(abs(expected), 1.0)


class CheckResult(BaseModel):
    """One numeric comparison at one sample point"""
    model_config = ConfigDict(frozen=True)

    name: str
    point: Optional[Tuple[float, float]] = None
    value: float
    expected: float
    residual: float
    tolerance: float

    @computed_field
    @property
    def passed(self) -> bool:
        return bool(np.isfinite(self.residual)) and self.residual <= self.tolerance


class VerificationReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    target: str
    n: int
    m: int
    grid: Optional[Tuple[int, ...]] = None
    frames: Tuple[str, ...] = ()
    tol: float
    h: float
    seed: int
    checks: List[CheckResult]

    @computed_field
    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def _worst(self) -> Optional[CheckResult]:
        if not self.checks:
            return None
        return max(self.checks, key=lambda c: c.residual / c.tolerance if np.isfinite(c.residual) else np.inf)

    @computed_field
    @property
    def worst_check(self) -> Optional[str]:
        worst = self._worst()
        return worst.name if worst else None

    @computed_field
    @property
    def worst_residual(self) -> Optional[float]:
        worst = self._worst()
        return worst.residual if worst else None

    def failures(self) -> List[CheckResult]:
        return [c for c in self.checks if not c.passed]

    def max_residual(self, name: str) -> float:
        return max((c.residual for c in self.checks if c.name == name), default=0.0)


def check(name: str, x: Optional[complex], value: float, expected: float,
          tolerance: float, residual: Optional[float] = None) -> CheckResult:
    """Comparison record; residual defaults to the floored relative error"""
    if residual is None:
        residual = relative_error(value, expected)
    point = None if x is None else (float(complex(x).real), float(complex(x).imag))
    return CheckResult(name=name, point=point, value=float(value), expected=float(expected),
                       residual=float(residual), tolerance=float(tolerance))


def projector_law_checks(field: ProjectorField, x: complex) -> List[CheckResult]:
    """Hermiticity, idempotency and trace of P(x)"""
    tol = NUMERIC_CONFIG["law_tolerance"]
    sample = HermitianProjector.model_construct(matrix=field.at(x), rank=field.rank)
    return [
        check("hermiticity", x, sample.hermiticity_residual(), 0.0, tol,
              sample.hermiticity_residual()),
        check("idempotency", x, sample.idempotency_residual(), 0.0, tol,
              sample.idempotency_residual()),
        check("trace", x, float(np.trace(sample.matrix).real), field.rank, tol,
              sample.trace_residual()),
    ]


def structural_checks(field: ProjectorField, x: complex, h: float) -> List[CheckResult]:
    """Projector laws, Euler-Lagrange residual, conformality and unit normal"""
    results = projector_law_checks(field, x)
    residual = el_residual(field, x, h)
    results.append(check("el_residual", x, residual, 0.0, NUMERIC_CONFIG["el_tolerance"],
                         residual))
    g_pp, g_mm = conformality(field, x, h)
    results.append(check("conformality", x, max(g_pp, g_mm), 0.0,
                         NUMERIC_CONFIG["conformal_tolerance"], max(g_pp, g_mm)))
    (dx_plus, dx_minus), normal = surface_tangent_normal(field, x, h)
    tangency = max(abs(np.trace(dx_plus @ normal)), abs(np.trace(dx_minus @ normal))) / 2.0
    scale = max(np.linalg.norm(dx_plus), 1.0)
    results.append(check("normal_orthogonality", x, tangency, 0.0,
                         NUMERIC_CONFIG["surface_tolerance"], tangency / scale))
    return results


def gram_ratio_checks(curve: PolyCurve, x: complex) -> List[CheckResult]:
    """|P+^j f|^2 / |P+^(j-1) f|^2 * (1+|x|^2)^2 = alpha_{j,n} on the Veronese curve"""
    _, norms = tower_directions(curve, complex(x))
    rho2 = conformal_factor(x)
    results = []
    for j in range(1, curve.n):
        value = (norms[j] / norms[j - 1]) ** 2 * rho2
        expected = alpha(j, curve.n)
        results.append(check(f"gram_ratio_{j}", x, value, expected,
                             NUMERIC_CONFIG["gram_tolerance"], abs(value - expected) / expected))
    return results


def complement_surface_check(curve: PolyCurve, beta: BetaVector, x: complex,
                             h: float) -> CheckResult:
    """d+X of beta and of its complement agree"""
    (ours, _), _ = surface_tangent_normal(VeroneseField(curve, beta), x, h)
    (theirs, _), _ = surface_tangent_normal(VeroneseField(curve, beta.complement()), x, h)
    residual = float(np.linalg.norm(ours - theirs) / max(np.linalg.norm(ours), 1.0))
    return check("complement_surface", x, residual, 0.0,
                 NUMERIC_CONFIG["surface_tolerance"], residual)


def invariant_checks(field: ProjectorField, x: complex, h: float, tol: float,
                     r, q, h2, kappa) -> List[CheckResult]:
    """Compare numeric (r, q, H^2, K) against exact values"""
    x = complex(x)
    return [
        check("r", x, density_lagrangian(field, x, h).coefficient(), float(r), tol),
        check("q", x, density_topological(field, x, h).coefficient(), float(q), tol),
        check("kappa", x, curvature_gaussian(field, x, h).value, float(kappa), tol),
        check("h2", x, curvature_mean(field, x, h).value ** 2, float(h2), tol),
    ]


def verify_veronese(beta: BetaVector, tol: Optional[float] = None, h: Optional[float] = None,
                    seed: Optional[int] = None, samples: Optional[int] = None,
                    structural: bool = True) -> VerificationReport:
    """Check a Veronese solution P_beta against its exact invariants"""
    tol = NUMERIC_CONFIG["tolerance"] if tol is None else tol
    h = NUMERIC_CONFIG["step"] if h is None else h
    seed = SAMPLING_CONFIG["seed"] if seed is None else seed
    samples = SAMPLING_CONFIG["samples"] if samples is None else samples
    if samples < 1:
        raise ValueError(f"Need at least one sample point, got {samples}")

    curve = veronese_curve(beta.n)
    field = VeroneseField(curve, beta)
    exact = beta_invariants(beta)
    checks: List[CheckResult] = []
    for x in sample_points(samples, seed):
        checks.extend(invariant_checks(field, x, h, tol, exact.r, exact.q, exact.h2, exact.kappa))
        if structural:
            checks.extend(structural_checks(field, x, h))
            checks.extend(gram_ratio_checks(curve, x))
            checks.append(complement_surface_check(curve, beta, x, h))

    report = VerificationReport(target="veronese", n=beta.n, m=beta.m,
                                grid=beta.grid.indices, tol=tol, h=h, seed=seed, checks=checks)
    if report.passed:
        logger.info(f"Verified {beta} at {samples} points (worst {report.worst_check}: "
                    f"{report.worst_residual:.3e})")
    else:
        logger.warning(f"Verification of {beta} failed: {report.worst_check} "
                       f"residual {report.worst_residual:.3e}")
    return report
