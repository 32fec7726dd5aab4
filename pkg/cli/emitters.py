"""
Emissores de relatório: JSON (schemas), DOT (poset) e texto.
"""

from typing import Any, List, NamedTuple, Optional

from core.errors import InvalidInputError
from core.schemas import Report

Format = str  # "text" | "json" | "dot"


class Outcome(NamedTuple):
    """
    Resultado de um subcomando.

    Attributes:
        report: Relatório estruturado
        passed: Todas as verificações internas passaram
        dot: Grafo DOT, só para subcomandos que o produzem
    """

    report: Report
    passed: bool = True
    dot: Optional[str] = None


def emit_json(report: Report) -> str:
    return report.model_dump_json(indent=2) + "\n"


def _text_lines(value: Any, indent: int) -> List[str]:
    pad = "  " * indent
    lines: List[str] = []
    if isinstance(value, dict):
        for key, item in value.items():
            if isinstance(item, (dict, list)) and item:
                lines.append(f"{pad}{key}:")
                lines.extend(_text_lines(item, indent + 1))
            else:
                lines.append(f"{pad}{key}: {_scalar(item)}")
    elif isinstance(value, list):
        if all(not isinstance(v, (dict, list)) for v in value):
            lines.append(pad + ", ".join(_scalar(v) for v in value))
        else:
            for item in value:
                if isinstance(item, list) and all(not isinstance(v, (dict, list)) for v in item):
                    lines.append(f"{pad}- " + " → ".join(_scalar(v) for v in item))
                else:
                    lines.append(f"{pad}-")
                    lines.extend(_text_lines(item, indent + 1))
    else:
        lines.append(pad + _scalar(value))
    return lines


def _scalar(value: Any) -> str:
    if isinstance(value, bool):
        return "✅" if value else "❌"
    if value is None:
        return "-"
    if isinstance(value, (list, dict)):
        return "[]" if isinstance(value, list) else "{}"
    return str(value)


def emit_text(report: Report) -> str:
    return "\n".join(_text_lines(report.model_dump(mode="json"), 0)) + "\n"


def emit(outcome: Outcome, fmt: Format) -> str:
    """
    Serializa o resultado no formato pedido.

    Raises:
        InvalidInputError: formato dot pedido para subcomando sem grafo
    """
    if fmt == "json":
        return emit_json(outcome.report)
    if fmt == "dot":
        if outcome.dot is None:
            raise InvalidInputError("--format dot só está disponível para o subcomando strata")
        return outcome.dot
    if fmt == "text":
        return emit_text(outcome.report)
    raise InvalidInputError(f"formato desconhecido: {fmt!r}")
