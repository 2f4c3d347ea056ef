from .g25 import (
    FrameField, FrameTerm, HoloFrame, exact_sqrt, frame_z1, frame_z2, get_frame,
    projector_from_frame,
)
from .ratio import RatioPolynomial
from .verification import verify_frame, verify_g25

__all__ = [
    "FrameField", "FrameTerm", "HoloFrame", "exact_sqrt", "frame_z1", "frame_z2",
    "get_frame", "projector_from_frame", "RatioPolynomial", "verify_frame", "verify_g25",
]
