"""
Configuração central de limites computacionais.

Os limites protegem as enumerações exaustivas (shuffles, busca em W_J,
contagem de Γ, enumeração de subespaços). Valores podem ser sobrescritos via
variáveis de ambiente (ou arquivo .env) e, numa execução da CLI, via flags.
"""

import os
from dataclasses import dataclass, replace
from typing import Optional

from dotenv import load_dotenv

from core.logger import get_logger

load_dotenv()
logger = get_logger(__name__)


@dataclass(frozen=True)
class Limits:
    """
    Limites de enumeração.

    Attributes:
        shuffle_bound: Máximo de n+m aceito por enumerate_shuffles.
        eo_search_bound: Máximo de n!·m! elementos y ∈ W_J por comparação EO.
        count_guard: Máximo de verificações elementares na contagem de Γ.
        oracle_guard: Máximo de subespaços enumerados pelo oráculo isotrópico.
        workers: Processos usados na contagem particionada (1 = sequencial).
    """

    shuffle_bound: int = 12
    eo_search_bound: int = 10**6
    count_guard: int = 10**8
    oracle_guard: int = 10**5
    workers: int = 1

    def with_overrides(self, **overrides: Optional[int]) -> "Limits":
        """Retorna cópia com os campos não-None substituídos."""
        changes = {k: v for k, v in overrides.items() if v is not None}
        return replace(self, **changes) if changes else self


_ENV_KEYS = {
    "shuffle_bound": "EOFOLKIT_SHUFFLE_BOUND",
    "eo_search_bound": "EOFOLKIT_EO_SEARCH_BOUND",
    "count_guard": "EOFOLKIT_COUNT_GUARD",
    "oracle_guard": "EOFOLKIT_ORACLE_GUARD",
    "workers": "EOFOLKIT_WORKERS",
}


def load_limits() -> Limits:
    """
    Lê limites do ambiente.

    Returns:
        Limits com defaults para variáveis ausentes ou inválidas
    """
    overrides = {}
    for field_name, env_key in _ENV_KEYS.items():
        raw = os.getenv(env_key)
        if raw is None or raw.strip() == "":
            continue
        try:
            value = int(raw)
        except ValueError:
            logger.warning(f"⚠️ {env_key}={raw!r} não é inteiro, usando default")
            continue
        if value < 1:
            logger.warning(f"⚠️ {env_key}={value} precisa ser positivo, usando default")
            continue
        overrides[field_name] = value
    return Limits().with_overrides(**overrides)
