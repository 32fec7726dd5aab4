"""Configuração compartilhada do pytest: perfil determinístico do hypothesis."""

import os

from hypothesis import HealthCheck, settings

settings.register_profile(
    "eo-folkit",
    derandomize=True,
    deadline=None,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile(os.getenv("HYPOTHESIS_PROFILE", "eo-folkit"))


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: varredura completa das faixas de aceitação (pular com -m 'not slow')")
