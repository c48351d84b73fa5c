from hamcrest import assert_that, equal_to

from sergeev_tools.common.config import CONFIG_ENV_VAR, DEFAULT_CONFIG, load_config


def test_defaults_without_config_file(tmp_path, monkeypatch):
    monkeypatch.setenv(CONFIG_ENV_VAR, str(tmp_path / "missing.yaml"))
    assert_that(load_config(), equal_to(DEFAULT_CONFIG))


def test_config_file_is_merged(tmp_path, monkeypatch):
    path = tmp_path / "config.yaml"
    path.write_text("verify:\n  seed: 7\nalgebra:\n  dimension_guard: 100\n")
    monkeypatch.setenv(CONFIG_ENV_VAR, str(path))
    config = load_config()
    assert_that(config["verify"]["seed"], equal_to(7))
    assert_that(config["verify"]["random_samples"], equal_to(200))
    assert_that(config["algebra"], equal_to({"dimension_guard": 100, "scalar_mode": "rational"}))
    assert_that(DEFAULT_CONFIG["verify"]["seed"], equal_to(0))
