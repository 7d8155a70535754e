import pytest

from spectral_gap_bounds.config import DEFAULT_QUAD_TOL, QUAD_TOL_ENV, load_numerics_config


@pytest.fixture(autouse=True)
def _isolated_env(monkeypatch, tmp_path):
    monkeypatch.chdir(tmp_path)
    monkeypatch.delenv(QUAD_TOL_ENV, raising=False)


def test_defaults():
    config = load_numerics_config()
    assert config.quadrature.tolerance == DEFAULT_QUAD_TOL
    assert config.optimizer.endpoint_clamp == 1e-9


def test_quadrature_tolerance_override(monkeypatch):
    monkeypatch.setenv(QUAD_TOL_ENV, "1e-8")
    assert load_numerics_config().quadrature.tolerance == 1e-8


@pytest.mark.parametrize("raw", ["abc", "-1", "0"])
def test_invalid_override_names_the_variable(monkeypatch, raw):
    monkeypatch.setenv(QUAD_TOL_ENV, raw)
    with pytest.raises(ValueError, match=QUAD_TOL_ENV):
        load_numerics_config()
