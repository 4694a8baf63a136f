"""
Exceções do Domínio de Sistemas de Interseção.
"""
from app.shared.domain.exceptions.domain_exceptions import (
    DomainException,
    InvalidArgumentsException,
    ResourceLimitException,
)


class QuorumException(DomainException):
    """Exceção base para o módulo de quóruns"""
    pass


class InvalidIntersectionSystemException(InvalidArgumentsException, QuorumException):
    """Sistema vazio, quórum vazio, índice fora do conjunto base ou elemento descoberto"""
    pass


class UnknownElementException(InvalidArgumentsException, QuorumException):
    """Elemento não pertence ao conjunto base"""
    pass


class BudgetExceededException(ResourceLimitException, QuorumException):
    """Força bruta excederia o orçamento de pares"""
    pass
