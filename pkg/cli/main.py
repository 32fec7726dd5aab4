"""
Ponto de entrada da CLI eo-folkit.

Códigos de saída: 0 tudo passou, 1 verificação interna falhou (diff JSON em
stdout), 2 uso incorreto, entrada inválida ou limite excedido.
"""

import argparse
import sys
from pathlib import Path
from typing import List, Optional

from core.config import Limits, load_limits
from core.errors import BoundExceededError, ConsistencyError, InvalidInputError
from core.logger import get_logger, set_global_level
from core.schemas import FailureReport
from cli import registry
from cli.emitters import emit, emit_json

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


def _common_flags() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "dot"), default="text", help="Formato do relatório")
    common.add_argument("--guard", type=int, default=None, help="Limite de enumeração (contagem e oráculo)")
    common.add_argument("--workers", type=int, default=None, help="Processos para a contagem particionada")
    common.add_argument("--out", type=Path, default=None, help="Arquivo de saída (default: stdout)")
    common.add_argument("--verbose", action="store_true", help="Logs INFO em stderr")
    return common


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="eo-folkit", description="Estratos EO, módulo de Dieudonné em S_fol e contagens")
    subparsers = parser.add_subparsers(dest="command", metavar="subcomando")
    subparsers.required = True
    common = _common_flags()
    for name in registry.command_names():
        module = registry.get_command(name)
        sub = subparsers.add_parser(name, parents=[common], help=module.HELP, description=module.HELP)
        module.configure(sub)
    return parser


def _limits_for(args: argparse.Namespace) -> Limits:
    for flag in ("guard", "workers"):
        value = getattr(args, flag)
        if value is not None and value < 1:
            raise InvalidInputError(f"--{flag} precisa ser positivo, recebido {value}")
    return load_limits().with_overrides(count_guard=args.guard, oracle_guard=args.guard, workers=args.workers)


def _write(text: str, out: Optional[Path]) -> None:
    if out is None:
        sys.stdout.write(text)
        sys.stdout.flush()
    else:
        out.write_text(text, encoding="utf-8")


def run(argv: Optional[List[str]] = None) -> int:
    """
    Executa um subcomando.

    Args:
        argv: Argumentos sem o nome do programa (default: sys.argv[1:])

    Returns:
        Código de saída (0, 1 ou 2)
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE

    set_global_level("INFO" if args.verbose else "WARNING")
    if args.format == "dot" and not registry.supports_dot(args.command):
        parser.print_usage(sys.stderr)
        print(f"eo-folkit: --format dot não suportado por {args.command}", file=sys.stderr)
        return EXIT_USAGE

    try:
        limits = _limits_for(args)
        outcome = registry.get_command(args.command).build(args, limits)
        _write(emit(outcome, args.format), args.out)
    except (InvalidInputError, BoundExceededError) as exc:
        logger.error(f"❌ {exc}")
        print(f"eo-folkit: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ConsistencyError as exc:
        logger.error(f"❌ Verificação falhou: {exc}")
        failure = FailureReport(error=str(exc), **exc.as_diff())
        sys.stdout.write(emit_json(failure))
        return EXIT_FAILED

    if not outcome.passed:
        logger.warning(f"⚠️ {args.command}: verificações internas falharam")
        return EXIT_FAILED
    return EXIT_OK


def main() -> int:
    return run(sys.argv[1:])
