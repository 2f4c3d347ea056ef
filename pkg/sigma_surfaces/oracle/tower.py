"""P+ tower of a holomorphic curve and the projectors P_beta built on it.

P+^j f is the component of f^(j) orthogonal to f, f', ..., f^(j-1), so the tower
is the Gram-Schmidt orthogonalization of the derivative stack and
|P+^j f|^2 = G_{j+1}/G_j is the squared diagonal of its triangular factor.
"""
import logging
from functools import lru_cache
from typing import List, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, model_validator

from ..config.config import NUMERIC_CONFIG
from ..exceptions import SingularPointError
from ..invariants.selection import BetaVector
from .curves import PolyCurve, derivative_columns

logger = logging.getLogger(__name__)


def orthonormalize(columns: np.ndarray, point: complex = 0j,
                   pivot_threshold: float = None) -> Tuple[np.ndarray, np.ndarray]:
    """Gram-Schmidt with one reorthogonalization pass.

    Returns (Q, d) where Q has orthonormal columns and d[j] = R[j, j] > 0.
    """
    if pivot_threshold is None:
        pivot_threshold = NUMERIC_CONFIG["pivot_threshold"]
    Q = np.array(columns, dtype=complex)
    n_rows, n_cols = Q.shape
    diag = np.zeros(n_cols)
    scale = np.linalg.norm(columns)
    for j in range(n_cols):
        v = Q[:, j]
        basis = Q[:, :j]
        for _ in range(2):
            v = v - basis @ (basis.conj().T @ v)
        rjj = np.linalg.norm(v)
        if not np.isfinite(rjj) or rjj <= pivot_threshold * scale:
            raise SingularPointError(point, f"pivot {j} is {rjj:.3e} (stack norm {scale:.3e})")
        Q[:, j] = v / rjj
        diag[j] = rjj
    return Q, diag


@lru_cache(maxsize=16384)
def tower_directions(curve: PolyCurve, x: complex) -> Tuple[np.ndarray, np.ndarray]:
    """Unit directions P+^j f/|P+^j f| (as columns) and |P+^j f|, j = 0..n-1"""
    stack = derivative_columns(curve, x, curve.n - 1)
    Q, diag = orthonormalize(stack, point=x)
    Q.flags.writeable = False
    diag.flags.writeable = False
    return Q, diag


def gram_tower(curve: PolyCurve, k: int, x: complex) -> List[float]:
    """|P+^j f|^2 for j = 0..k"""
    if not 0 <= k < curve.n:
        raise ValueError(f"tower depth k={k} must satisfy 0 <= k < n={curve.n}")
    stack = derivative_columns(curve, x, k)
    _, diag = orthonormalize(stack, point=x)
    return [float(d * d) for d in diag]


def conformal_factor(x: complex) -> float:
    """(1 + |x|^2)^2"""
    return (1.0 + abs(x) ** 2) ** 2


class HermitianProjector(BaseModel):
    """Sample P(x) of a rank-m hermitian projector field"""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    matrix: np.ndarray
    rank: int

    @model_validator(mode='after')
    def validate_projector(self):
        tol = NUMERIC_CONFIG["projector_tolerance"]
        if self.matrix.ndim != 2 or self.matrix.shape[0] != self.matrix.shape[1]:
            raise ValueError("A projector must be a square matrix")
        worst = max(self.hermiticity_residual(), self.idempotency_residual(),
                    self.trace_residual())
        if worst > tol:
            raise ValueError(f"Matrix is not a rank-{self.rank} projector (residual {worst:.3e})")
        return self

    def hermiticity_residual(self) -> float:
        return float(np.linalg.norm(self.matrix - self.matrix.conj().T))

    def idempotency_residual(self) -> float:
        return float(np.linalg.norm(self.matrix @ self.matrix - self.matrix))

    def trace_residual(self) -> float:
        return float(abs(np.trace(self.matrix) - self.rank))


class VeroneseField:
    """x -> P_beta(x) = sum_j beta_j P_j(x) over the tower of a curve"""

    def __init__(self, curve: PolyCurve, beta: BetaVector):
        if curve.n != beta.n:
            raise ValueError(f"Curve dimension {curve.n} does not match beta dimension {beta.n}")
        self.curve = curve
        self.beta = beta
        self._weights = np.array(beta.bits, dtype=float)
        self._jumps = np.abs(np.diff(self._weights))

    @property
    def dimension(self) -> int:
        return self.beta.n

    @property
    def rank(self) -> int:
        return self.beta.m

    def at(self, x: complex) -> np.ndarray:
        Q, _ = tower_directions(self.curve, complex(x))
        return (Q * self._weights) @ Q.conj().T

    def metric_at(self, x: complex) -> float:
        """g+- = 1/2 sum_j (beta_j - beta_(j+1))^2 |P+^(j+1) f|^2 / |P+^j f|^2

        d+P_j = A_j - A_(j-1) with A_j = P+^(j+1)f (P+^j f)^dagger / |P+^j f|^2,
        and the A_j are trace-orthogonal, so no differencing is needed.
        """
        _, norms = tower_directions(self.curve, complex(x))
        ratios = (norms[1:] / norms[:-1]) ** 2
        return float(0.5 * self._jumps @ ratios)

    def complement(self) -> "VeroneseField":
        return VeroneseField(self.curve, self.beta.complement())

    def __repr__(self):
        return f"VeroneseField({self.beta})"


def direction_projector(curve: PolyCurve, j: int, x: complex) -> np.ndarray:
    """P_j = P+^j f (P+^j f)^dagger / |P+^j f|^2"""
    Q, _ = tower_directions(curve, complex(x))
    q = Q[:, j]
    return np.outer(q, q.conj())


def projector_beta(curve: PolyCurve, beta: BetaVector, x: complex) -> HermitianProjector:
    """P_beta(x) as a validated hermitian projector of rank m"""
    return HermitianProjector(matrix=VeroneseField(curve, beta).at(x), rank=beta.m)
