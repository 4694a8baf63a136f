"""
Mapeamento exceção → código de saída da CLI.

0 ok, 2 argumentos/validação, 3 limites de recurso, 4 falha de amostragem,
1 qualquer outro erro.
"""
import logging
from typing import Any, Dict

from pydantic import ValidationError

from app.shared.domain.exceptions.domain_exceptions import (
    InvalidArgumentsException,
    ResourceLimitException,
    SamplingException,
)
from app.shared.infrastructure.exceptions.repository_exception import RepositoryException

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_INVALID = 2
EXIT_RESOURCE_LIMIT = 3
EXIT_SAMPLING = 4


def exit_code_for(exc: BaseException) -> int:
    if isinstance(exc, (InvalidArgumentsException, ValidationError, RepositoryException)):
        return EXIT_INVALID
    if isinstance(exc, ResourceLimitException):
        return EXIT_RESOURCE_LIMIT
    if isinstance(exc, SamplingException):
        return EXIT_SAMPLING
    return EXIT_FAILURE


def error_payload(exc: BaseException) -> Dict[str, Any]:
    """Formato padrão de erro (uma linha JSON em stderr)"""
    payload: Dict[str, Any] = {
        "success": False,
        "message": str(exc) if exit_code_for(exc) != EXIT_FAILURE else "Internal error",
        "error": type(exc).__name__,
    }

    if isinstance(exc, ValidationError):
        payload["errors"] = [
            {
                "field": ".".join(str(loc) for loc in error["loc"]),
                "message": error["msg"],
                "type": error["type"],
            }
            for error in exc.errors()
        ]

    if isinstance(exc, ResourceLimitException):
        payload["requested"] = exc.requested
        payload["limit"] = exc.limit

    return payload
