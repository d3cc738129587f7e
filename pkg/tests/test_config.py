from pathlib import Path

from vwu_checker.config import PACKAGED_TABLES_DIR, Settings, get_settings, settings_dict


def test_defaults_use_packaged_tables(monkeypatch) -> None:
    monkeypatch.delenv("VWU_TABLES_DIR", raising=False)
    settings = Settings(_env_file=None)
    assert settings.tables_dir is None
    assert settings.resolved_tables_dir == PACKAGED_TABLES_DIR
    assert (PACKAGED_TABLES_DIR / "G2.txt").is_file()


def test_environment_overrides(monkeypatch, tmp_path) -> None:
    monkeypatch.setenv("VWU_TABLES_DIR", str(tmp_path))
    monkeypatch.setenv("VWU_ORACLE_TRIALS", "7")
    monkeypatch.setenv("VWU_METRICS_FILE", "")
    settings = Settings(_env_file=None)
    assert settings.resolved_tables_dir == Path(tmp_path)
    assert settings.oracle_trials == 7
    assert settings.metrics_file is None


def test_settings_dict_is_json_ready(monkeypatch) -> None:
    get_settings.cache_clear()
    monkeypatch.setenv("VWU_SEED", "11")
    try:
        config = settings_dict()
        assert config["seed"] == 11
        assert config["tables_dir"] is None or isinstance(config["tables_dir"], str)
    finally:
        get_settings.cache_clear()
