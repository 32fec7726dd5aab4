"""
Sistema de logging centralizado do eo-folkit.

Todos os pacotes (weyl, gf, dieudonne, deformation, counting, cli) obtêm o
logger por aqui. Os handlers escrevem em stderr: stdout fica reservado para
os relatórios JSON/DOT/texto emitidos pela CLI.
"""
import logging
import os
import sys

_DEFAULT_LEVEL = "WARNING"
_PACKAGES = frozenset({"core", "weyl", "gf", "dieudonne", "deformation", "counting", "cli"})


def _resolve_level(level: int | str | None) -> int:
    """Converte nível textual (ou None -> variável de ambiente) em int."""
    if level is None:
        level = os.getenv("EOFOLKIT_LOG_LEVEL", _DEFAULT_LEVEL)
    if isinstance(level, str):
        resolved = logging.getLevelName(level.upper())
        return resolved if isinstance(resolved, int) else logging.WARNING
    return level


def setup_logger(name: str, level: int | str | None = None) -> logging.Logger:
    """
    Configura logger com formatação padrão.

    Args:
        name: Nome do logger (geralmente __name__ do módulo)
        level: Nível de logging; se None, lê EOFOLKIT_LOG_LEVEL

    Returns:
        Logger configurado
    """
    logger = logging.getLogger(name)

    # Evita duplicação de handlers
    if logger.handlers:
        return logger

    resolved = _resolve_level(level)
    logger.setLevel(resolved)

    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel(resolved)

    # Formato: LEVEL - ModuleName - Message
    formatter = logging.Formatter(
        fmt='%(levelname)s - %(name)s - %(message)s',
        datefmt='%Y-%m-%d %H:%M:%S'
    )
    console_handler.setFormatter(formatter)
    logger.addHandler(console_handler)
    logger.propagate = False

    return logger


def set_global_level(level: int | str) -> None:
    """Ajusta o nível de todos os loggers já criados pelo eo-folkit (flag --verbose)."""
    resolved = _resolve_level(level)
    for name, obj in logging.Logger.manager.loggerDict.items():
        if isinstance(obj, logging.Logger) and obj.handlers and name.split(".")[0] in _PACKAGES:
            obj.setLevel(resolved)
            for handler in obj.handlers:
                handler.setLevel(resolved)


def get_logger(module_name: str = __name__) -> logging.Logger:
    """Helper para obter logger configurado"""
    return setup_logger(module_name)
