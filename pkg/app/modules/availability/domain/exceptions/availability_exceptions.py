"""
Exceções do Domínio de Disponibilidade.
"""
from app.shared.domain.exceptions.domain_exceptions import DomainException, InvalidArgumentsException


class AvailabilityException(DomainException):
    """Exceção base para o módulo de disponibilidade"""
    pass


class InvalidAvailabilityParamsException(InvalidArgumentsException, AvailabilityException):
    """Exige 1/2 < r < p <= 1, c_min >= 1, n >= c_min"""
    pass


class UnknownSamplingModeException(InvalidArgumentsException, AvailabilityException):
    pass
