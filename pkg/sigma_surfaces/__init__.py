"""Exact and numeric invariants of surfaces built from G(m,n) sigma model solutions"""
from .exceptions import (
    CatalogStoreError, DegenerateMetricError, IndexRangeError, SigmaSurfaceError,
    SingularPointError, StepSizeError,
)

__version__ = "0.1"
