"""Contagens exatas em PG(k, q)."""
from app.shared.domain.exceptions.domain_exceptions import InvalidArgumentsException


def gaussian_binomial(s: int, r: int, q: int) -> int:
    """
    Coeficiente q-binomial gaussiano [s choose r]_q, exato.

    prod_{i<r} (q^s - q^i) / (q^r - q^i), que conta os subespaços de dimensão
    vetorial r de um espaço de dimensão s.
    """
    if r < 0 or s < 0 or r > s:
        raise InvalidArgumentsException(f"Exige 0 <= r <= s (s={s}, r={r})")
    if q < 2:
        raise InvalidArgumentsException(f"q precisa ser >= 2 (q={q})")

    numerator, denominator = 1, 1
    for i in range(r):
        numerator *= q ** (s - i) - 1
        denominator *= q ** (i + 1) - 1
    return numerator // denominator


def points_in_subspace(q: int, d: int) -> int:
    """|PG(d, q)| = (q^{d+1} - 1)/(q - 1)"""
    if d < 0:
        return 0
    return (q ** (d + 1) - 1) // (q - 1)


def count_subspaces(k: int, d: int, q: int) -> int:
    """|PG_d(k, q)|"""
    if not 0 <= d <= k:
        raise InvalidArgumentsException(f"Exige 0 <= d <= k (k={k}, d={d})")
    return gaussian_binomial(k + 1, d + 1, q)


def count_subspaces_through_point(k: int, d: int, q: int) -> int:
    """Subespaços de dimensão d que contêm um ponto fixo (quociente por esse ponto)"""
    if not 0 <= d <= k:
        raise InvalidArgumentsException(f"Exige 0 <= d <= k (k={k}, d={d})")
    return gaussian_binomial(k, d, q)
