"""
Cotas analíticas de disponibilidade.

Racionais exatos (Fraction) sempre que a grandeza é racional; exp e ln são
avaliados em Decimal com settings.DECIMAL_PRECISION dígitos, de modo que as
comparações "exato <= cota" não dependem de tolerância.
"""
import math
from collections import Counter
from decimal import ROUND_CEILING, Decimal, localcontext
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, NamedTuple, Union

from app.core.config import settings
from app.modules.availability.domain.exceptions.availability_exceptions import (
    InvalidAvailabilityParamsException,
)

Number = Union[int, float, str, Fraction, Decimal]

HALF = Fraction(1, 2)


class CommitteeFailure(NamedTuple):
    """F_p(c; r) exato e a cota exp(-a1(r)·c)"""
    exact: Fraction
    bound: Decimal

    def exact_decimal(self) -> Decimal:
        return to_decimal(self.exact)

    def holds(self) -> bool:
        return self.exact_decimal() <= self.bound


# ============================================================================
# HELPERS
# ============================================================================

def exact(value: Number) -> Fraction:
    """Fraction exata (floats entram pelo valor binário exato)"""
    if isinstance(value, bool):
        raise InvalidAvailabilityParamsException("Booleano não é um número")
    try:
        return Fraction(value)
    except (TypeError, ValueError) as e:
        raise InvalidAvailabilityParamsException(f"Número inválido {value!r}: {e}")


def to_decimal(value: Fraction) -> Decimal:
    with localcontext() as ctx:
        ctx.prec = settings.DECIMAL_PRECISION
        return Decimal(value.numerator) / Decimal(value.denominator)


def _exp_neg(value: Fraction) -> Decimal:
    """exp(-value)"""
    with localcontext() as ctx:
        ctx.prec = settings.DECIMAL_PRECISION
        return (-(Decimal(value.numerator) / Decimal(value.denominator))).exp()


def _ln(value: Fraction) -> Decimal:
    with localcontext() as ctx:
        ctx.prec = settings.DECIMAL_PRECISION
        return (Decimal(value.numerator) / Decimal(value.denominator)).ln()


def _check_thresholds(r: Fraction, p: Fraction) -> None:
    if not HALF < r < p <= 1:
        raise InvalidAvailabilityParamsException(f"Exige 1/2 < r < p <= 1 (r={r}, p={p})")


# ============================================================================
# BINOMIAL TAILS
# ============================================================================

def binomial_upper_tail(n: int, prob: Number, k: int) -> Fraction:
    """P(Z >= k), Z ~ Binomial(n, prob), por soma direta em inteiros"""
    prob = exact(prob)
    if n < 0 or not 0 <= prob <= 1:
        raise InvalidAvailabilityParamsException(f"Binomial inválida (n={n}, prob={prob})")
    if k <= 0:
        return Fraction(1)
    if k > n:
        return Fraction(0)

    a, b = prob.numerator, prob.denominator
    total = sum(math.comb(n, i) * a ** i * (b - a) ** (n - i) for i in range(k, n + 1))
    return Fraction(total, b ** n)


def chernoff_tail(n: int, q: Number, delta: Number) -> Decimal:
    """exp(-δ²nq/(2+δ)), cota para P(Z >= (1+δ)nq) com Z ~ Binomial(n, q)"""
    q, delta = exact(q), exact(delta)
    if n < 1:
        raise InvalidAvailabilityParamsException(f"n precisa ser >= 1 (n={n})")
    if not 0 <= q <= 1:
        raise InvalidAvailabilityParamsException(f"q precisa estar em [0, 1] (q={q})")
    if delta <= 0:
        raise InvalidAvailabilityParamsException(f"δ precisa ser positivo (δ={delta})")
    return _exp_neg(delta * delta * n * q / (2 + delta))


def chernoff_delta(p: Number, r: Number) -> Fraction:
    """δ = (p - r)/(1 - p): (1+δ)(1-p)c = (1-r)c"""
    p, r = exact(p), exact(r)
    if not r < p < 1:
        raise InvalidAvailabilityParamsException(f"Exige r < p < 1 (r={r}, p={p})")
    return (p - r) / (1 - p)


# ============================================================================
# COMMITTEE FAILURE
# ============================================================================

def a1(p: Number, x: Number) -> Fraction:
    """a1(x) = (p - x)²/(2 - p - x), decrescente em x"""
    p, x = exact(p), exact(x)
    if not 0 <= x < p <= 1:
        raise InvalidAvailabilityParamsException(f"Exige 0 <= x < p <= 1 (x={x}, p={p})")
    return (p - x) ** 2 / (2 - p - x)


@lru_cache(maxsize=1024)
def committee_failure_exact(c: int, r: Fraction, p: Fraction) -> Fraction:
    """
    P(menos de ⌈rc⌉ processos disponíveis) = P(Z > c - rc), Z ~ Binomial(c, 1-p)
    """
    r, p = exact(r), exact(p)
    _check_thresholds(r, p)
    if c < 1:
        raise InvalidAvailabilityParamsException(f"c precisa ser >= 1 (c={c})")
    threshold = math.ceil(r * c)
    # falha sse faltosos >= c - threshold + 1
    return binomial_upper_tail(c, 1 - p, c - threshold + 1)


def committee_failure(c: int, r: Number, p: Number) -> CommitteeFailure:
    r, p = exact(r), exact(p)
    return CommitteeFailure(
        exact=committee_failure_exact(c, r, p),
        bound=_exp_neg(a1(p, r) * c),
    )


# ============================================================================
# AVAILABILITY BOUNDS
# ============================================================================

def availability_lower_bound(n: int, c_min: int, r: Number, p: Number) -> Decimal:
    """max(0, 1 - (n/c_min)·exp(-a1(r)·c_min))"""
    r, p = exact(r), exact(p)
    _check_thresholds(r, p)
    if not 1 <= c_min <= n:
        raise InvalidAvailabilityParamsException(f"Exige 1 <= c_min <= n (c_min={c_min}, n={n})")
    with localcontext() as ctx:
        ctx.prec = settings.DECIMAL_PRECISION
        value = 1 - to_decimal(Fraction(n, c_min)) * _exp_neg(a1(p, r) * c_min)
        return max(Decimal(0), value)


def product_form_availability(sizes: Iterable[int], r: Number, p: Number) -> Fraction:
    """Π_C (1 - F_p(|C|; r)): probabilidade de todos os comitês atingirem o limiar"""
    r, p = exact(r), exact(p)
    result = Fraction(1)
    for size, count in Counter(sizes).items():
        result *= (1 - committee_failure_exact(size, r, p)) ** count
    return result


def sizing_constant(b: Number, r: Number, p: Number) -> Fraction:
    """a = (b + 1)/a1(r)"""
    b, r, p = exact(b), exact(r), exact(p)
    _check_thresholds(r, p)
    if b < 0:
        raise InvalidAvailabilityParamsException(f"b precisa ser >= 0 (b={b})")
    return (b + 1) / a1(p, r)


def required_committee_size(b: Number, r: Number, p: Number, n: int) -> int:
    """⌈a·ln n⌉ com a = (b + 1)/a1(r)"""
    if n < 2:
        raise InvalidAvailabilityParamsException(f"n precisa ser >= 2 (n={n})")
    a = sizing_constant(b, r, p)
    with localcontext() as ctx:
        ctx.prec = settings.DECIMAL_PRECISION
        return int((to_decimal(a) * _ln(Fraction(n))).to_integral_value(rounding=ROUND_CEILING))


def theorem_guarantee(a: Number, b: Number, n: int) -> Decimal:
    """1 - 1/(a·n^b·ln n)"""
    a, b = exact(a), exact(b)
    if n < 2 or a <= 0:
        raise InvalidAvailabilityParamsException(f"Exige n >= 2 e a > 0 (n={n}, a={a})")
    with localcontext() as ctx:
        ctx.prec = settings.DECIMAL_PRECISION
        n_b = to_decimal(Fraction(n)) ** to_decimal(b)
        return 1 - 1 / (to_decimal(a) * n_b * _ln(Fraction(n)))
