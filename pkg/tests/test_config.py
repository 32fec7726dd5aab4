import logging
import sys

from core.config import Limits, load_limits
from core.logger import get_logger, set_global_level


def test_defaults_without_environment(monkeypatch):
    for key in ("SHUFFLE_BOUND", "EO_SEARCH_BOUND", "COUNT_GUARD", "ORACLE_GUARD", "WORKERS"):
        monkeypatch.delenv(f"EOFOLKIT_{key}", raising=False)
    assert load_limits() == Limits()
    assert Limits().oracle_guard == 10**5


def test_environment_overrides(monkeypatch):
    monkeypatch.setenv("EOFOLKIT_COUNT_GUARD", "500")
    monkeypatch.setenv("EOFOLKIT_WORKERS", "2")
    limits = load_limits()
    assert (limits.count_guard, limits.workers) == (500, 2)


def test_malformed_values_fall_back(monkeypatch):
    monkeypatch.setenv("EOFOLKIT_SHUFFLE_BOUND", "doze")
    monkeypatch.setenv("EOFOLKIT_ORACLE_GUARD", "0")
    limits = load_limits()
    assert limits.shuffle_bound == 12
    assert limits.oracle_guard == 10**5


def test_with_overrides_ignores_none():
    base = Limits()
    assert base.with_overrides(count_guard=None) is base
    assert base.with_overrides(count_guard=7).count_guard == 7


def test_logger_keeps_stdout_clean():
    first = get_logger("weyl.demo")
    second = get_logger("weyl.demo")
    assert first is second
    assert len(first.handlers) == 1
    assert first.handlers[0].stream not in (sys.stdout, sys.__stdout__)


def test_set_global_level():
    logger = get_logger("counting.demo")
    previous = logger.level
    try:
        set_global_level("debug")
        assert logger.level == logging.DEBUG
    finally:
        set_global_level(previous)
