class SigmaSurfaceError(Exception):
    """Base class for every error raised by sigma_surfaces"""


class IndexRangeError(SigmaSurfaceError, ValueError):
    """An index or family parameter lies outside its admissible range"""


class SingularPointError(SigmaSurfaceError):
    """The Gram tower or frame Gram matrix loses rank at the sample point"""

    def __init__(self, point: complex, detail: str):
        super().__init__(f"singular point at x={point!r}: {detail}")
        self.point = point


class StepSizeError(SigmaSurfaceError):
    """Finite differences produced a non-finite quotient"""


class DegenerateMetricError(SigmaSurfaceError):
    """The conformal factor g+- vanishes at the sample point"""


class CatalogStoreError(SigmaSurfaceError):
    """The catalog database rejected an operation"""
