"""
Vocabulário de erros compartilhado entre os pacotes.

- InvalidInputError: pré-condição violada (m >= n, permutação inválida, twist errado...)
- BoundExceededError: limite configurado estourado (enumeração, busca em W_J, guard)
- ConsistencyError: duas computações independentes discordam (bug de implementação)
"""

from typing import Any, Optional


class EoFolkitError(Exception):
    """Base comum de todos os erros do eo-folkit."""


class InvalidInputError(EoFolkitError, ValueError):
    """Entrada fora do domínio da operação."""


class BoundExceededError(EoFolkitError, ValueError):
    """
    Limite configurado excedido.

    Attributes:
        bound: Limite em vigor
        required: Tamanho que a computação exigiria
    """

    def __init__(self, what: str, bound: int, required: int):
        self.what = what
        self.bound = bound
        self.required = required
        super().__init__(f"{what}: requer {required}, limite configurado {bound}")


class ConsistencyError(EoFolkitError, AssertionError):
    """
    Verificação cruzada falhou.

    Attributes:
        check: Nome da verificação
        expected: Valor esperado (serializável)
        actual: Valor obtido (serializável)
    """

    def __init__(self, check: str, expected: Any = None, actual: Any = None, detail: Optional[str] = None):
        self.check = check
        self.expected = expected
        self.actual = actual
        self.detail = detail
        message = f"{check}: esperado {expected!r}, obtido {actual!r}"
        if detail:
            message += f" ({detail})"
        super().__init__(message)

    def as_diff(self) -> dict:
        """Diff estruturado usado pela CLI no código de saída 1."""
        return {
            "check": self.check,
            "expected": _jsonable(self.expected),
            "actual": _jsonable(self.actual),
            "detail": self.detail,
        }


def ensure(condition: bool, check: str, expected: Any = None, actual: Any = None, detail: Optional[str] = None) -> None:
    """Levanta ConsistencyError se a condição for falsa."""
    if not condition:
        raise ConsistencyError(check, expected, actual, detail)


def _jsonable(value: Any) -> Any:
    if value is None or isinstance(value, (bool, int, float, str)):
        return value
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, set, frozenset)):
        items = sorted(value, key=str) if isinstance(value, (set, frozenset)) else value
        return [_jsonable(v) for v in items]
    return str(value)
