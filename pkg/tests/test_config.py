import pytest

from sigma_surfaces.config.config import (
    CATALOG_CONFIG, FRAME_CONFIG, NUMERIC_CONFIG, SAMPLING_CONFIG, SEARCH_CONFIG,
)
from sigma_surfaces.config.loader import (
    get_database_url, load_config, load_frame_config, load_numeric_config, load_search_config,
)

ENV_VARS = (
    "SIGSURF_STEP", "SIGSURF_TOL", "SIGSURF_SEED", "SIGSURF_RICHARDSON", "SIGSURF_THREADS",
    "SIGSURF_FRAME_TOL", "SIGSURF_FRAME_CURVATURE_TOL", "SIGSURF_FRAME_SAMPLES",
    "SIGSURF_DATABASE_URL",
)


@pytest.fixture
def clean_env(monkeypatch):
    for name in ENV_VARS:
        monkeypatch.delenv(name, raising=False)
    return monkeypatch


class TestLoader:
    def test_numeric_defaults(self, clean_env):
        assert load_numeric_config() == {
            "step": 1e-3, "tolerance": 1e-5, "seed": 0, "richardson": True,
        }

    def test_numeric_overrides(self, clean_env):
        clean_env.setenv("SIGSURF_STEP", "5e-4")
        clean_env.setenv("SIGSURF_TOL", "1e-6")
        clean_env.setenv("SIGSURF_SEED", "42")
        clean_env.setenv("SIGSURF_RICHARDSON", "off")
        assert load_numeric_config() == {
            "step": 5e-4, "tolerance": 1e-6, "seed": 42, "richardson": False,
        }

    @pytest.mark.parametrize("value, expected", [("1", True), ("Yes", True), (" true ", True),
                                                 ("0", False), ("no", False)])
    def test_richardson_flag(self, clean_env, value, expected):
        clean_env.setenv("SIGSURF_RICHARDSON", value)
        assert load_numeric_config()["richardson"] is expected

    def test_threads(self, clean_env):
        assert load_search_config()["threads"] >= 1
        clean_env.setenv("SIGSURF_THREADS", "6")
        assert load_search_config() == {"threads": 6}
        clean_env.setenv("SIGSURF_THREADS", "0")
        assert load_search_config() == {"threads": 1}

    def test_frame(self, clean_env):
        assert load_frame_config() == {
            "ratio_tolerance": 1e-6, "curvature_tolerance": 1e-4, "samples": 25,
        }
        clean_env.setenv("SIGSURF_FRAME_SAMPLES", "10")
        assert load_frame_config()["samples"] == 10

    def test_database_url(self, clean_env):
        assert get_database_url() == "sqlite:///sigsurf_catalog.db"
        clean_env.setenv("SIGSURF_DATABASE_URL", "sqlite://")
        assert get_database_url() == "sqlite://"

    def test_bad_number(self, clean_env):
        clean_env.setenv("SIGSURF_STEP", "small")
        with pytest.raises(ValueError):
            load_numeric_config()

    def test_load_config_sections(self, clean_env):
        config = load_config()
        assert set(config) == {"numeric", "search", "frame", "database_url"}


class TestConstants:
    def test_tolerances_are_ordered(self):
        assert NUMERIC_CONFIG["law_tolerance"] < NUMERIC_CONFIG["projector_tolerance"]
        assert NUMERIC_CONFIG["gram_tolerance"] <= NUMERIC_CONFIG["conformal_tolerance"]
        assert NUMERIC_CONFIG["curvature_step_factor"] > 1

    def test_sampling_annulus(self):
        assert 0 <= SAMPLING_CONFIG["min_radius"] < SAMPLING_CONFIG["radius"]
        assert SAMPLING_CONFIG["samples"] >= 1

    def test_frames_and_search(self):
        assert FRAME_CONFIG["expected_r"] == 5
        assert SEARCH_CONFIG["family_representative_i"] == 2
        assert CATALOG_CONFIG["schema_version"] == 1
