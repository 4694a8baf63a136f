"""
Exceções do Domínio de Simulação de equivocação.
"""
from app.shared.domain.exceptions.domain_exceptions import DomainException, InvalidArgumentsException


class SimulationException(DomainException):
    """Exceção base para o módulo de simulação"""
    pass


class UnknownStrategyException(InvalidArgumentsException, SimulationException):
    """Estratégia fora de minimal-pair, random-pair, honest"""
    pass


class InvalidScenarioException(InvalidArgumentsException, SimulationException):
    """Processo honesto votando em dois blocos, ou equivocador fora do conjunto bizantino"""
    pass
