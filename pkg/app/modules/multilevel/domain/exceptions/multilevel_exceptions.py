"""
Exceções do Domínio Multinível (construção e fórmulas de slashing).
"""
from app.shared.domain.exceptions.domain_exceptions import (
    DomainException,
    InvalidArgumentsException,
    SamplingException,
)


class MultilevelException(DomainException):
    """Exceção base para o módulo multinível"""
    pass


class InvalidConfigException(InvalidArgumentsException, MultilevelException):
    """Configuração viola as restrições da construção"""
    pass


class UnknownLevelException(InvalidArgumentsException, MultilevelException):
    """Nível fora de 1..ℓ"""
    pass


class WitnessUnavailableException(InvalidArgumentsException, MultilevelException):
    """Comitês de tamanhos diferentes ou r·c não inteiro"""
    pass


class SamplingExhaustedException(SamplingException, MultilevelException):
    """δ_j subespaços distintos por um ponto não obtidos dentro do orçamento"""

    def __init__(self, message: str, point: int = -1, level: int = -1):
        super().__init__(message)
        self.point = point
        self.level = level
