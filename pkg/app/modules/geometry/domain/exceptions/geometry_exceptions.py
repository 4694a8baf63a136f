"""
Exceções do Domínio de Geometria (corpos finitos e espaços projetivos).
"""
from app.shared.domain.exceptions.domain_exceptions import (
    DomainException,
    InvalidArgumentsException,
    ResourceLimitException,
)


class GeometryException(DomainException):
    """Exceção base para o módulo de geometria"""
    pass


# ============================================================================
# FIELD EXCEPTIONS
# ============================================================================

class NotPrimePowerException(InvalidArgumentsException, GeometryException):
    """q não é potência de primo"""
    pass


class UnsupportedFieldSizeException(InvalidArgumentsException, GeometryException):
    """q acima do limite suportado"""
    pass


class DivisionByZeroException(GeometryException, ZeroDivisionError):
    """Inverso de zero"""
    pass


class FieldMismatchException(InvalidArgumentsException, GeometryException):
    """Elementos de corpos diferentes"""
    pass


# ============================================================================
# PROJECTIVE EXCEPTIONS
# ============================================================================

class InvalidPointException(InvalidArgumentsException, GeometryException):
    """Vetor nulo ou não normalizado"""
    pass


class DimensionMismatchException(InvalidArgumentsException, GeometryException):
    """Objetos de espaços ambientes diferentes"""
    pass


class SizeOverflowException(ResourceLimitException, GeometryException):
    """Enumeração excederia o limite configurado"""
    pass
