from dataclasses import dataclass
from functools import lru_cache
from typing import List, NamedTuple, Optional, Tuple

import galois
import numpy as np

from app.core.config import settings
from app.shared.domain.exceptions.domain_exceptions import InvalidArgumentsException
from app.modules.geometry.domain.exceptions.geometry_exceptions import (
    DivisionByZeroException,
    GeometryException,
    FieldMismatchException,
    NotPrimePowerException,
    UnsupportedFieldSizeException,
)


class FieldTables(NamedTuple):
    """Tabelas de operação indexadas pela representação inteira dos elementos"""
    add: np.ndarray
    mul: np.ndarray
    neg: np.ndarray
    inv: np.ndarray


@dataclass(frozen=True)
class Field:
    """
    Corpo finito GF(q), q = p^m.

    Elementos são representados por inteiros em [0, q): o inteiro
    sum(c_i * p^i) corresponde ao polinômio sum(c_i * x^i) módulo `modulus`.
    A ordem canônica dos elementos é a ordem desses inteiros.

    modulus: coeficientes do polinômio irredutível mônico, grau menor primeiro
    (vazio quando m == 1).
    """

    q: int
    p: int
    m: int
    modulus: Tuple[int, ...] = ()

    @classmethod
    def create(cls, q: int, max_order: Optional[int] = None) -> "Field":
        return field_new(q, max_order=max_order)

    # ---------- galois backend ----------

    @property
    def gf(self) -> type:
        """Classe FieldArray do galois para este corpo"""
        return _galois_field(self.p, self.m, self.modulus)

    @property
    def tables(self) -> FieldTables:
        return _field_tables(self.p, self.m, self.modulus)

    # ---------- elements ----------

    def element(self, value: int) -> "FieldElement":
        return FieldElement(self, int(value))

    def from_coeffs(self, coeffs: Tuple[int, ...]) -> "FieldElement":
        if len(coeffs) != self.m:
            raise InvalidArgumentsException(
                f"Elemento de GF({self.q}) precisa de {self.m} coeficientes"
            )
        value = 0
        for c in reversed(coeffs):
            if not 0 <= c < self.p:
                raise InvalidArgumentsException(f"Coeficiente {c} fora de [0, {self.p})")
            value = value * self.p + c
        return FieldElement(self, value)

    def elements(self) -> List["FieldElement"]:
        return [FieldElement(self, v) for v in range(self.q)]

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    def is_modulus_irreducible(self) -> bool:
        """Busca exaustiva de fatores mônicos de grau 1..m//2"""
        if self.m == 1:
            return True
        return _is_irreducible_bruteforce(self.p, self.modulus)

    def __str__(self) -> str:
        return f"GF({self.q})"


@dataclass(frozen=True)
class FieldElement:
    """Elemento de GF(q) na representação inteira do Field"""

    field: Field
    value: int

    def __post_init__(self):
        if not 0 <= self.value < self.field.q:
            raise InvalidArgumentsException(
                f"Valor {self.value} fora de [0, {self.field.q})"
            )

    @property
    def coeffs(self) -> Tuple[int, ...]:
        """Coeficientes polinomiais, grau menor primeiro (m resíduos em [0, p))"""
        digits = []
        v = self.value
        for _ in range(self.field.m):
            v, c = divmod(v, self.field.p)
            digits.append(c)
        return tuple(digits)

    def is_zero(self) -> bool:
        return self.value == 0

    def order(self) -> int:
        """Ordem multiplicativa"""
        if self.is_zero():
            raise DivisionByZeroException("Zero não tem ordem multiplicativa")
        mul = self.field.tables.mul
        acc, n = self.value, 1
        while acc != 1:
            acc = int(mul[acc, self.value])
            n += 1
        return n

    def __add__(self, other: "FieldElement") -> "FieldElement":
        return add(self, other)

    def __sub__(self, other: "FieldElement") -> "FieldElement":
        return add(self, neg(other))

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        return mul(self, other)

    def __truediv__(self, other: "FieldElement") -> "FieldElement":
        return mul(self, inv(other))

    def __neg__(self) -> "FieldElement":
        return neg(self)

    def __int__(self) -> int:
        return self.value

    def __str__(self) -> str:
        return str(self.value)

    def __repr__(self) -> str:
        return f"FieldElement(GF({self.field.q}), {self.value})"


# ============================================================================
# OPERATIONS
# ============================================================================

def _same_field(a: FieldElement, b: FieldElement) -> Field:
    if a.field != b.field:
        raise FieldMismatchException(f"{a.field} != {b.field}")
    return a.field


def add(a: FieldElement, b: FieldElement) -> FieldElement:
    field = _same_field(a, b)
    return FieldElement(field, int(field.tables.add[a.value, b.value]))


def mul(a: FieldElement, b: FieldElement) -> FieldElement:
    field = _same_field(a, b)
    return FieldElement(field, int(field.tables.mul[a.value, b.value]))


def neg(a: FieldElement) -> FieldElement:
    return FieldElement(a.field, int(a.field.tables.neg[a.value]))


def inv(a: FieldElement) -> FieldElement:
    if a.is_zero():
        raise DivisionByZeroException(f"Inverso de 0 em {a.field}")
    return FieldElement(a.field, int(a.field.tables.inv[a.value]))


# ============================================================================
# CONSTRUCTION
# ============================================================================

def field_new(q: int, max_order: Optional[int] = None) -> Field:
    """
    Constrói GF(q) com módulo determinístico.

    O módulo é o menor polinômio mônico irredutível de grau m
    (ordem lexicográfica dos coeficientes, grau maior primeiro),
    verificado por busca exaustiva de fatores.

    Raises:
        InvalidArgumentsException: q < 2
        NotPrimePowerException: q com dois fatores primos distintos
        UnsupportedFieldSizeException: q acima de MAX_FIELD_ORDER
    """
    if isinstance(q, bool) or not isinstance(q, (int, np.integer)) or q < 2:
        raise InvalidArgumentsException(f"Ordem do corpo inválida: {q!r}")
    q = int(q)

    if not galois.is_prime_power(q):
        raise NotPrimePowerException(f"{q} não é potência de primo")

    limit = settings.MAX_FIELD_ORDER if max_order is None else max_order
    if q > limit:
        raise UnsupportedFieldSizeException(f"q={q} excede o limite suportado ({limit})")

    return _build_field(q)


@lru_cache(maxsize=None)
def _build_field(q: int) -> Field:
    primes, exponents = galois.factors(q)
    p, m = int(primes[0]), int(exponents[0])

    modulus: Tuple[int, ...] = ()
    if m > 1:
        poly = galois.irreducible_poly(p, m, method="min")
        modulus = tuple(int(c) for c in reversed(poly.coeffs))
        if not _is_irreducible_bruteforce(p, modulus):
            raise GeometryException(f"Módulo {poly} não é irredutível sobre GF({p})")

    return Field(q=q, p=p, m=m, modulus=modulus)


def _poly_from_low_first(p: int, coeffs: Tuple[int, ...]) -> galois.Poly:
    return galois.Poly(list(reversed(coeffs)), field=galois.GF(p))


def _is_irreducible_bruteforce(p: int, modulus: Tuple[int, ...]) -> bool:
    f = _poly_from_low_first(p, modulus)
    prime_field = galois.GF(p)
    degree = len(modulus) - 1
    for e in range(1, degree // 2 + 1):
        # mônicos de grau e: inteiros em [p^e, 2 p^e)
        for integer in range(p ** e, 2 * p ** e):
            g = galois.Poly.Int(integer, field=prime_field)
            if int(f % g) == 0:
                return False
    return True


@lru_cache(maxsize=None)
def _galois_field(p: int, m: int, modulus: Tuple[int, ...]) -> type:
    if m == 1:
        return galois.GF(p)
    return galois.GF(p ** m, irreducible_poly=_poly_from_low_first(p, modulus))


@lru_cache(maxsize=None)
def _field_tables(p: int, m: int, modulus: Tuple[int, ...]) -> FieldTables:
    gf = _galois_field(p, m, modulus)
    elements = gf.elements
    add_table = (elements[:, None] + elements[None, :]).view(np.ndarray).astype(np.int64)
    mul_table = (elements[:, None] * elements[None, :]).view(np.ndarray).astype(np.int64)
    neg_table = (-elements).view(np.ndarray).astype(np.int64)

    inv_table = np.zeros(p ** m, dtype=np.int64)
    nonzero = elements[1:]
    inv_table[1:] = (nonzero ** -1).view(np.ndarray).astype(np.int64)

    return FieldTables(add=add_table, mul=mul_table, neg=neg_table, inv=inv_table)
