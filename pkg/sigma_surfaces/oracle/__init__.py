from .curves import DerivativeStack, PolyCurve, derivative_columns, veronese_curve
from .tower import (
    HermitianProjector, VeroneseField, direction_projector, gram_tower, orthonormalize,
    projector_beta, tower_directions,
)
from .geometry import (
    CurvatureEstimate, DensityEstimate, ProjectorField, conformality, curvature_gaussian,
    curvature_mean, density_lagrangian, density_topological, density_topological_log,
    el_residual, metric, su_inner, su_norm, surface_tangent_normal,
)
from .sampling import regular_points, sample_points
from .verification import CheckResult, VerificationReport, relative_error, verify_veronese

__all__ = [
    "DerivativeStack", "PolyCurve", "derivative_columns", "veronese_curve",
    "HermitianProjector", "VeroneseField", "direction_projector", "gram_tower",
    "orthonormalize", "projector_beta", "tower_directions",
    "CurvatureEstimate", "DensityEstimate", "ProjectorField", "conformality",
    "curvature_gaussian", "curvature_mean", "density_lagrangian", "density_topological",
    "density_topological_log", "el_residual", "metric", "su_inner", "su_norm",
    "surface_tangent_normal", "regular_points", "sample_points",
    "CheckResult", "VerificationReport", "relative_error", "verify_veronese",
]
