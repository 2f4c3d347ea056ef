import logging
from typing import Callable, List, Optional

import numpy as np

from ..config.config import SAMPLING_CONFIG
from ..exceptions import SingularPointError

logger = logging.getLogger(__name__)


def sample_points(count: int, seed: Optional[int] = None, radius: Optional[float] = None,
                  min_radius: Optional[float] = None) -> List[complex]:
    """Area-uniform points in the annulus min_radius <= |x| <= radius"""
    seed = SAMPLING_CONFIG["seed"] if seed is None else seed
    radius = SAMPLING_CONFIG["radius"] if radius is None else radius
    min_radius = SAMPLING_CONFIG["min_radius"] if min_radius is None else min_radius
    if count < 0:
        raise ValueError(f"Sample count must be non-negative, got {count}")
    if not 0 <= min_radius < radius:
        raise ValueError(f"Need 0 <= min_radius < radius, got {min_radius}, {radius}")
    rng = np.random.default_rng(seed)
    moduli = np.sqrt(rng.uniform(min_radius ** 2, radius ** 2, size=count))
    angles = rng.uniform(0.0, 2.0 * np.pi, size=count)
    return [complex(z) for z in moduli * np.exp(1j * angles)]


def regular_points(probe: Callable[[complex], object], count: int,
                   seed: Optional[int] = None, radius: Optional[float] = None,
                   min_radius: Optional[float] = None) -> List[complex]:
    """Seeded points at which probe does not raise SingularPointError.

    Rejected points are replaced by fresh draws from the same generator
    stream, so the result depends only on the seed.
    """
    seed = SAMPLING_CONFIG["seed"] if seed is None else seed
    budget = count + SAMPLING_CONFIG["max_attempts"]
    accepted = []
    for x in sample_points(budget, seed, radius, min_radius):
        if len(accepted) == count:
            break
        try:
            probe(x)
        except SingularPointError as e:
            logger.warning(f"Resampling: {e}")
            continue
        accepted.append(x)
    if len(accepted) < count:
        raise SingularPointError(0j, f"only {len(accepted)} of {count} regular points found")
    return accepted
