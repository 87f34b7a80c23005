# pylint: disable=unused-argument, unused-import, redefined-outer-name, protected-access, missing-module-docstring, missing-class-docstring
# pyright: reportGeneralTypeIssues=false

import pytest
from pydantic import ValidationError

from pystirling.exceptions import InvalidConfig, InvalidSeriesDocument, PystirlingException
from pystirling.settings import DEFAULT_MAX_N, DEFAULT_SEED, DEFAULT_WORKERS, PystirlingSettings, load_settings
from tests.fixtures.families import config_file


def test_default_settings(monkeypatch):
    monkeypatch.delenv("PYSTIRLING_SEED", raising=False)
    settings = load_settings()

    assert settings.seed == DEFAULT_SEED
    assert settings.max_n == DEFAULT_MAX_N
    assert settings.workers == DEFAULT_WORKERS
    assert settings.format == "text"
    assert settings.check is False


def test_seed_from_environment(monkeypatch):
    monkeypatch.setenv("PYSTIRLING_SEED", "42")

    assert load_settings().seed == 42


def test_settings_from_config_file(config_file):
    settings = load_settings(config_file)

    assert settings.format == "json"
    assert settings.max_n == 3
    assert settings.seed == 7


def test_overrides_take_precedence(config_file):
    settings = load_settings(config_file, max_n=5, format=None, check=True)

    assert settings.max_n == 5
    assert settings.format == "json"
    assert settings.check is True


def test_missing_config_file(tmp_path):
    with pytest.raises(InvalidConfig, match="does not exist"):
        load_settings(str(tmp_path / "missing.json"))


def test_invalid_config_file(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{not json", encoding="utf-8")

    with pytest.raises(InvalidConfig):
        load_settings(str(path))


def test_config_file_must_hold_an_object(tmp_path):
    path = tmp_path / "list.json"
    path.write_text("[1, 2]", encoding="utf-8")

    with pytest.raises(InvalidConfig, match="expected an object") as exc_info:
        load_settings(str(path))

    assert isinstance(exc_info.value, PystirlingException)
    assert not isinstance(exc_info.value, InvalidSeriesDocument)


def test_workers_validator():
    with pytest.raises(ValidationError):
        PystirlingSettings(workers=0)

    settings = PystirlingSettings(workers=2)
    with pytest.raises(ValidationError):
        settings.workers = -1


def test_unknown_format():
    with pytest.raises(ValidationError):
        load_settings(format="html")
