from decimal import Decimal
from fractions import Fraction
from numbers import Rational
from typing import Union

from app.shared.domain.exceptions.domain_exceptions import InvalidArgumentsException

RationalLike = Union[int, str, Fraction]


def parse_rational(value: RationalLike, name: str = "valor") -> Fraction:
    """
    Converte um valor exato em Fraction.

    Aceita inteiros, Fractions e strings no formato "3/5" ou "0.75".
    Floats são recusados: limiares e probabilidades precisam ser exatos.

    Examples:
        "3/5" -> Fraction(3, 5)
        "0.75" -> Fraction(3, 4)
    """
    if isinstance(value, bool):
        raise InvalidArgumentsException(f"{name}: booleano não é um racional")

    if isinstance(value, Rational):
        return Fraction(value)

    if isinstance(value, Decimal):
        return Fraction(value)

    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            raise InvalidArgumentsException(f"{name}: racional inválido '{value}'")

    raise InvalidArgumentsException(
        f"{name}: use string ('3/5', '0.6') ou inteiro, não {type(value).__name__}"
    )


def render_rational(value: Fraction) -> str:
    """Forma exata em string: '7/15', '4800'"""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def render_decimal(value: Union[Fraction, Decimal, int, float]) -> float:
    """Aproximação decimal com 12 dígitos significativos (estável entre execuções)"""
    return float(f"{float(value):.12g}")
