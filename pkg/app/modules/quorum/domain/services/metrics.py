"""
Métricas de sistemas de interseção: complexidade de mensagens, grau, carga
(racionais exatos) e slashability (mínima interseção entre quóruns distintos).
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Hashable, Optional, Tuple

import numpy as np

from app.core.config import settings
from app.modules.quorum.domain.entities.intersection_system_entity import IntersectionSystem
from app.modules.quorum.domain.exceptions.quorum_exceptions import BudgetExceededException

logger = logging.getLogger(__name__)

_ROW_BLOCK = 512


@dataclass(frozen=True)
class SlashabilityResult:
    """
    value: mínimo |A ∩ B| encontrado
    witness: par de índices de quóruns que o atinge
    exact: True para força bruta; False para amostragem (limite superior)
    pairs_examined: pares distintos (ou amostrados) considerados
    """
    value: int
    witness: Tuple[int, int]
    exact: bool
    pairs_examined: int


# ============================================================================
# BASIC METRICS
# ============================================================================

def verify_intersecting(system: IntersectionSystem) -> bool:
    """Todo par de quóruns se intersecta (varredura em blocos com saída antecipada)"""
    matrix = system.incidence_matrix.astype(np.int32)
    for start in range(0, system.size, _ROW_BLOCK):
        block = matrix[start:start + _ROW_BLOCK] @ matrix.T
        if not block.all():
            return False
    return True


def msg_complexity(system: IntersectionSystem) -> int:
    """Tamanho máximo de um quórum"""
    return int(system.quorum_sizes.max())


def degree(system: IntersectionSystem, element: Hashable) -> int:
    """Número de quóruns que contêm o elemento"""
    return int(system.degrees[system.index_of(element)])


def max_degree(system: IntersectionSystem) -> int:
    return int(system.degrees.max())


def load_of(system: IntersectionSystem, element: Hashable) -> Fraction:
    """deg(C)/|Q|: probabilidade de um quórum uniforme conter C"""
    return Fraction(degree(system, element), system.size)


def load(system: IntersectionSystem) -> Fraction:
    """max_C deg(C)/|Q|"""
    return Fraction(max_degree(system), system.size)


def expected_pairwise_intersection(system: IntersectionSystem) -> Fraction:
    """E|A ∩ B| para A, B independentes e uniformes: soma dos quadrados das cargas"""
    degrees = [int(x) for x in system.degrees]
    return Fraction(sum(x * x for x in degrees), system.size ** 2)


# ============================================================================
# SLASHABILITY
# ============================================================================

def distinct_pairs(system: IntersectionSystem) -> int:
    return system.size * (system.size - 1) // 2


def slashability_bruteforce_detailed(
    system: IntersectionSystem, pair_budget: Optional[int] = None
) -> SlashabilityResult:
    """
    min |A ∩ B| sobre pares não ordenados de quóruns distintos; |A| quando há
    um único quórum.

    Raises:
        BudgetExceededException: número de pares acima do orçamento
    """
    budget = settings.PAIR_BUDGET if pair_budget is None else pair_budget
    pairs = distinct_pairs(system)

    if system.size == 1:
        return SlashabilityResult(int(system.quorum_sizes[0]), (0, 0), True, 0)

    if pairs > budget:
        raise BudgetExceededException(
            f"{pairs} pares excedem o orçamento de força bruta ({budget})",
            requested=pairs,
            limit=budget,
        )

    matrix = system.incidence_matrix.astype(np.int32)
    best, witness = None, (0, 0)
    for start in range(0, system.size, _ROW_BLOCK):
        block = matrix[start:start + _ROW_BLOCK] @ matrix.T
        rows = np.arange(block.shape[0])
        # exclui o próprio quórum
        block[rows, start + rows] = np.iinfo(np.int32).max
        flat = int(block.argmin())
        i, j = divmod(flat, block.shape[1])
        value = int(block[i, j])
        if best is None or value < best:
            best, witness = value, (start + i, j)

    logger.debug("Brute-force slashability %d over %d pairs", best, pairs)
    return SlashabilityResult(best, tuple(sorted(witness)), True, pairs)


def slashability_bruteforce(
    system: IntersectionSystem, pair_budget: Optional[int] = None
) -> int:
    return slashability_bruteforce_detailed(system, pair_budget).value


def slashability_sampled(
    system: IntersectionSystem,
    rng: np.random.Generator,
    pairs: Optional[int] = None,
) -> SlashabilityResult:
    """
    Sorteia pares de quóruns distintos e devolve o menor |A ∩ B| observado:
    um limite superior para a slashability, com o par testemunha.
    """
    count = settings.SAMPLED_PAIRS if pairs is None else pairs
    if system.size == 1:
        return SlashabilityResult(int(system.quorum_sizes[0]), (0, 0), True, 0)

    first = rng.integers(0, system.size, size=count)
    second = rng.integers(0, system.size - 1, size=count)
    second = second + (second >= first)

    matrix = system.incidence_matrix
    sizes = (matrix[first] & matrix[second]).sum(axis=1)
    position = int(sizes.argmin())
    witness = tuple(sorted((int(first[position]), int(second[position]))))
    return SlashabilityResult(int(sizes[position]), witness, False, count)


def slashability(
    system: IntersectionSystem,
    rng: Optional[np.random.Generator] = None,
    pair_budget: Optional[int] = None,
    pairs: Optional[int] = None,
) -> SlashabilityResult:
    """Força bruta dentro do orçamento; acima dele, modo amostrado"""
    budget = settings.PAIR_BUDGET if pair_budget is None else pair_budget
    if distinct_pairs(system) <= budget:
        return slashability_bruteforce_detailed(system, budget)

    logger.warning(
        "Pair budget exceeded (%d pairs > %d); falling back to sampled slashability",
        distinct_pairs(system),
        budget,
    )
    return slashability_sampled(system, rng or np.random.default_rng(0), pairs)


def pairwise_intersection_mean(
    system: IntersectionSystem, rng: np.random.Generator, pairs: int
) -> float:
    """Média empírica de |A ∩ B| com A, B independentes e uniformes"""
    first = rng.integers(0, system.size, size=pairs)
    second = rng.integers(0, system.size, size=pairs)
    matrix = system.incidence_matrix
    return float((matrix[first] & matrix[second]).sum(axis=1).mean())
