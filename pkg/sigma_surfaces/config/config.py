from .loader import load_config

# Load environment variables first
_ENV = load_config()

# Finite differences and oracle tolerances
NUMERIC_CONFIG = {
    "step": _ENV["numeric"]["step"],
    "tolerance": _ENV["numeric"]["tolerance"],
    "richardson": _ENV["numeric"]["richardson"],
    # ln g+- is differentiated with a wider outer stencil than P itself
    "curvature_step_factor": 10.0,
    "pivot_threshold": 1e-12,
    "projector_tolerance": 1e-8,
    "law_tolerance": 1e-10,
    "el_tolerance": 1e-5,
    "conformal_tolerance": 1e-6,
    "gram_tolerance": 1e-8,
    "surface_tolerance": 1e-8,
}

# Seeded sample points on the complex plane
SAMPLING_CONFIG = {
    "seed": _ENV["numeric"]["seed"],
    "samples": 5,
    "radius": 2.0,
    "min_radius": 0.1,
    "max_attempts": 100,
}

# Non-Veronese G(2,5) frames
FRAME_CONFIG = {
    "rcond_threshold": 1e-10,
    "ratio_tolerance": _ENV["frame"]["ratio_tolerance"],
    "curvature_tolerance": _ENV["frame"]["curvature_tolerance"],
    "samples": _ENV["frame"]["samples"],
    "expected_r": 5,
}

# Coincidence search and n_{k,i} scan
SEARCH_CONFIG = {
    "k_max": 12,
    "n_max": 12,
    "ratio_max_param": 50,
    "family_representative_i": 2,
}

# Catalog records and persistence
CATALOG_CONFIG = {
    "schema_version": 1,
}
