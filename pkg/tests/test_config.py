import pytest

from matroidkit.config import Settings, load_settings
from matroidkit.errors import ConfigError

ENV_NAMES = [
    "MATROIDKIT_LOG_LEVEL",
    "MATROIDKIT_MAX_WITNESSES",
    "MATROIDKIT_SERIES_MINOR_MAX",
    "MATROIDKIT_WORKERS",
    "DATABASE_URL",
    "MATROIDKIT_GRAPHIC_MAX_EDGES",
    "MATROIDKIT_THEOREM3_MAX_EDGES",
    "MATROIDKIT_BINARY_MAX_RANK",
    "MATROIDKIT_BINARY_MAX_COLS",
    "MATROIDKIT_UNIFORM_MAX",
    "MATROIDKIT_CLUTTER_N",
]


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    for name in ENV_NAMES:
        monkeypatch.delenv(name, raising=False)


def test_defaults():
    assert load_settings(dotenv=False) == Settings()


def test_environment_overrides(monkeypatch):
    monkeypatch.setenv("MATROIDKIT_LOG_LEVEL", "debug")
    monkeypatch.setenv("MATROIDKIT_CLUTTER_N", "4")
    monkeypatch.setenv("DATABASE_URL", "sqlite:///runs.db")
    settings = load_settings(dotenv=False)
    assert settings.log_level == "DEBUG"
    assert settings.clutter_n == 4
    assert settings.database_url == "sqlite:///runs.db"


def test_blank_values_fall_back_to_defaults(monkeypatch):
    monkeypatch.setenv("MATROIDKIT_MAX_WITNESSES", "  ")
    monkeypatch.setenv("DATABASE_URL", "")
    settings = load_settings(dotenv=False)
    assert settings.max_witnesses == 100
    assert settings.database_url is None


def test_workers_are_at_least_one(monkeypatch):
    monkeypatch.setenv("MATROIDKIT_WORKERS", "0")
    assert load_settings(dotenv=False).workers == 1


@pytest.mark.parametrize(
    "name, value",
    [
        ("MATROIDKIT_UNIFORM_MAX", "eight"),
        ("MATROIDKIT_SERIES_MINOR_MAX", "-1"),
        ("MATROIDKIT_LOG_LEVEL", "LOUD"),
    ],
)
def test_malformed_values(monkeypatch, name, value):
    monkeypatch.setenv(name, value)
    with pytest.raises(ConfigError):
        load_settings(dotenv=False)


def test_settings_are_frozen():
    with pytest.raises(AttributeError):
        Settings().workers = 2
