"""
Exceções base do domínio.
Estas exceções representam pré-condições e limites de recursos violados;
cada módulo especializa a hierarquia com as suas próprias exceções.
"""


class DomainException(Exception):
    """Exceção base para todos os módulos de domínio"""
    pass


# ============================================================================
# VALIDATION
# ============================================================================

class InvalidArgumentsException(DomainException):
    """Argumentos fora do domínio da operação (InvalidArgs)"""
    pass


# ============================================================================
# RESOURCE LIMITS
# ============================================================================

class ResourceLimitException(DomainException):
    """Operação excederia um limite configurado (enumeração, pares, ...)"""

    def __init__(self, message: str, requested: int = 0, limit: int = 0):
        super().__init__(message)
        self.requested = requested
        self.limit = limit


# ============================================================================
# SAMPLING
# ============================================================================

class SamplingException(DomainException):
    """Falha de amostragem aleatória dentro do orçamento de tentativas"""
    pass
