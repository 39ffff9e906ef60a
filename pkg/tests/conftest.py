"""Shared fixtures."""

import pytest

from src.domain.kneser import KneserParams, KSubset
from src.infrastructure.config import reload_config

ENV_VARS = (
    "KNESER_MAX_MATERIALIZE",
    "KNESER_MAX_EXHAUSTIVE_N",
    "KNESER_MAX_SEARCH_DEGREE",
    "KNESER_MAX_SUBGROUPS",
    "KNESER_WORKERS",
    "KNESER_SEED",
    "KNESER_SAMPLE_COUNT",
    "KNESER_PLAN_PATH",
    "LOG_LEVEL",
)


@pytest.fixture(autouse=True)
def clean_config(monkeypatch):
    """Every test starts from default configuration."""
    for name in ENV_VARS:
        monkeypatch.delenv(name, raising=False)
    reload_config()


@pytest.fixture
def petersen() -> KneserParams:
    return KneserParams(5, 2)


@pytest.fixture
def subset():
    """Build a KSubset from elements: subset(params, 1, 2)."""
    def build(params: KneserParams, *elements: int) -> KSubset:
        return KSubset.from_elements(elements, params)
    return build
