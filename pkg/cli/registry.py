"""
Registry de subcomandos.

Mapeia o nome do subcomando (como digitado na linha de comando) para o
módulo em cli/commands e carrega esse módulo sob demanda.
"""

import importlib
from types import ModuleType
from typing import List, Optional

# Mapeamento subcomando (CLI) -> nome do módulo em cli.commands
COMMAND_TO_MODULE = {
    "strata": "strata",
    "stratum": "stratum",
    "dieudonne": "dieudonne",
    "canfilt": "canfilt",
    "deform": "deform",
    "count": "count",
    "derivation-demo": "derivation_demo",
    "verify": "verify",
}

# Subcomandos que aceitam --format dot
_DOT_COMMANDS = frozenset({"strata"})


def get_module_name(command: str) -> Optional[str]:
    """Retorna o nome do módulo para o subcomando, ou None se não mapeado."""
    return COMMAND_TO_MODULE.get(command)


def supports_dot(command: str) -> bool:
    return command in _DOT_COMMANDS


def command_names() -> List[str]:
    return list(COMMAND_TO_MODULE)


def get_command(command: str) -> ModuleType:
    """
    Carrega o módulo do subcomando.

    Importa cli.commands.<módulo>; o módulo expõe HELP, configure(parser) e
    build(args, limits).
    """
    module_name = get_module_name(command)
    if not module_name:
        raise ValueError(f"subcomando não mapeado: {command!r}")
    return importlib.import_module(f"cli.commands.{module_name}")
