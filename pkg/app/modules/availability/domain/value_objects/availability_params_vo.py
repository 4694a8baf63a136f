from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from app.modules.availability.domain.exceptions.availability_exceptions import (
    InvalidAvailabilityParamsException,
)


@dataclass(frozen=True)
class AvailabilityParams:
    """
    p: disponibilidade de cada processo
    r: limiar dos comitês
    n: número de processos
    c_min: menor tamanho de comitê (c_n)
    a, b: constantes do dimensionamento c_n >= a·ln n
    """

    p: Fraction
    r: Fraction
    n: int
    c_min: int
    a: Optional[Fraction] = None
    b: Optional[Fraction] = None

    def __post_init__(self):
        if not Fraction(1, 2) < self.r < self.p <= 1:
            raise InvalidAvailabilityParamsException(
                f"Exige 1/2 < r < p <= 1 (r={self.r}, p={self.p})"
            )
        if not 1 <= self.c_min <= self.n:
            raise InvalidAvailabilityParamsException(
                f"Exige 1 <= c_min <= n (c_min={self.c_min}, n={self.n})"
            )
        if self.a is not None and self.a <= 0:
            raise InvalidAvailabilityParamsException(f"a precisa ser positivo (a={self.a})")
        if self.b is not None and self.b < 0:
            raise InvalidAvailabilityParamsException(f"b precisa ser >= 0 (b={self.b})")
