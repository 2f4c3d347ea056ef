"""Checks on the two explicit G(2,5) frames"""
import logging
from fractions import Fraction
from typing import List, Optional

from ..config.config import FRAME_CONFIG, NUMERIC_CONFIG, SAMPLING_CONFIG
from ..oracle.geometry import (
    curvature_gaussian, curvature_mean, density_lagrangian, density_topological,
)
from ..oracle.sampling import regular_points
from ..oracle.verification import (
    CheckResult, VerificationReport, check, relative_error, structural_checks,
)
from .g25 import FrameField, frame_z1, frame_z2, get_frame
from .ratio import RatioPolynomial

logger = logging.getLogger(__name__)


def _settings(samples, h, tol, curvature_tol, seed):
    return (
        FRAME_CONFIG["samples"] if samples is None else samples,
        NUMERIC_CONFIG["step"] if h is None else h,
        FRAME_CONFIG["ratio_tolerance"] if tol is None else tol,
        FRAME_CONFIG["curvature_tolerance"] if curvature_tol is None else curvature_tol,
        SAMPLING_CONFIG["seed"] if seed is None else seed,
    )


def _holomorphic_checks(field: FrameField, x: complex, h: float,
                        curvature_tol: float) -> List[CheckResult]:
    """r = 5, L = Q and K = 4/5 at one point"""
    expected_r = FRAME_CONFIG["expected_r"]
    lagrangian = density_lagrangian(field, x, h)
    topological = density_topological(field, x, h)
    name = field.frame.name
    return [
        check(f"{name}_r", x, lagrangian.coefficient(), expected_r, curvature_tol),
        check(f"{name}_l_equals_q", x, topological.value, lagrangian.value, curvature_tol,
              relative_error(topological.coefficient(), lagrangian.coefficient())),
        check(f"{name}_kappa", x, curvature_gaussian(field, x, h).value,
              float(Fraction(4, expected_r)), curvature_tol),
    ]


def _both_regular(fields):
    def probe(x):
        for field in fields:
            field.at(x)
    return probe


def verify_g25(samples: Optional[int] = None, h: Optional[float] = None,
               tol: Optional[float] = None, curvature_tol: Optional[float] = None,
               seed: Optional[int] = None) -> VerificationReport:
    """K = 4/5, L = Q for both frames, the P1/P2 ratio and non-constant H"""
    samples, h, tol, curvature_tol, seed = _settings(samples, h, tol, curvature_tol, seed)
    if samples < 2:
        raise ValueError(f"Need at least two sample points, got {samples}")
    fields = [FrameField(frame_z1()), FrameField(frame_z2())]
    poly = RatioPolynomial()
    checks: List[CheckResult] = []
    h1_values = []

    for x in regular_points(_both_regular(fields), samples, seed):
        for field in fields:
            checks.extend(_holomorphic_checks(field, x, h, curvature_tol))
        h1 = curvature_mean(fields[0], x, h).value
        h2 = curvature_mean(fields[1], x, h).value
        h1_values.append(h1)
        y = abs(x) ** 2
        checks.append(check("h_ratio", x, (h1 / h2) ** 2, poly.ratio(y), tol))
        logger.debug(f"x={x:.4f}: H1={h1:.8f} H2={h2:.8f}")

    spread = max(h1_values) - min(h1_values)
    # passes when the spread exceeds 10 tol
    checks.append(check("h_nonconstant", None, spread, 10 * tol, 1.0,
                        10 * tol / spread if spread > 0 else float("inf")))

    report = VerificationReport(target="g25", n=5, m=2,
                                frames=tuple(f.frame.name for f in fields),
                                tol=tol, h=h, seed=seed, checks=checks)
    logger.info(f"G(2,5) frames: passed={report.passed}, "
                f"max ratio residual {report.max_residual('h_ratio'):.3e}")
    return report


def verify_frame(name: str, samples: Optional[int] = None, h: Optional[float] = None,
                 curvature_tol: Optional[float] = None,
                 seed: Optional[int] = None) -> VerificationReport:
    """Projector laws, EL residual, conformality, r = 5, L = Q and K = 4/5 for one frame"""
    samples, h, _, curvature_tol, seed = _settings(samples, h, None, curvature_tol, seed)
    field = FrameField(get_frame(name))
    checks: List[CheckResult] = []
    for x in regular_points(field.at, samples, seed):
        checks.extend(_holomorphic_checks(field, x, h, curvature_tol))
        checks.extend(structural_checks(field, x, h))
    report = VerificationReport(target=f"frame_{field.frame.name}", n=field.dimension,
                                m=field.rank, frames=(field.frame.name,), tol=curvature_tol,
                                h=h, seed=seed, checks=checks)
    logger.info(f"Frame {name}: passed={report.passed}")
    return report
